// AVX2 + FMA variants of the complex kernels. This translation unit is the
// only one compiled with -mavx2; the dispatcher guards it behind CPUID.
#ifdef NOSIG_HAVE_AVX2

#include <immintrin.h>

#include "nosig/kernels.hpp"

namespace nosig::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// (ar + i*ai) * x for a whole vector of interleaved complex doubles, with
// ar/ai pre-broadcast.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
  __m256d xswap = _mm256_permute_pd(x, 0x5);  // [xi0, xr0, xi1, xr1]
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xswap));
}

}  // namespace

void axpy(std::size_t n, cdouble a, const cdouble* x, cdouble* y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    yv = _mm256_add_pd(yv, cmul_broadcast(ar, ai, xv));
    _mm256_storeu_pd(yp + 2 * i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(std::size_t n, cdouble a, cdouble* x) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  double* xp = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    _mm256_storeu_pd(xp + 2 * i, cmul_broadcast(ar, ai, xv));
  }
  for (; i < n; ++i) x[i] *= a;
}

cdouble dot_conj(std::size_t n, const cdouble* x, const cdouble* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d yswap = _mm256_permute_pd(yv, 0x5);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);     // xr*yr, xi*yi
    acc_im = _mm256_fmadd_pd(xv, yswap, acc_im);  // xr*yi, xi*yr
  }
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(acc_re);
  double im = hsum(_mm256_mul_pd(acc_im, sign));
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

double norm_sq(std::size_t n, const cdouble* x) {
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void hadamard(std::size_t n, const cdouble* x, cdouble* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d yr = _mm256_movedup_pd(yv);        // [yr0, yr0, yr1, yr1]
    __m256d yi = _mm256_permute_pd(yv, 0xF);   // [yi0, yi0, yi1, yi1]
    __m256d xswap = _mm256_permute_pd(xv, 0x5);
    __m256d res = _mm256_fmaddsub_pd(yr, xv, _mm256_mul_pd(yi, xswap));
    _mm256_storeu_pd(yp + 2 * i, res);
  }
  for (; i < n; ++i) y[i] *= x[i];
}

void diag_scale(std::size_t n, const double* w, cdouble* x) {
  double* xp = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m128d wpair = _mm_loadu_pd(w + i);
    __m256d wv = _mm256_set_m128d(_mm_unpackhi_pd(wpair, wpair),
                                  _mm_unpacklo_pd(wpair, wpair));
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    _mm256_storeu_pd(xp + 2 * i, _mm256_mul_pd(xv, wv));
  }
  for (; i < n; ++i) x[i] *= w[i];
}

void matmul_acc(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
                const cdouble* b, cdouble* c) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const cdouble aip = a[i * k + p];
      if (aip == cdouble{}) continue;
      axpy(n, aip, b + p * n, c + i * n);
    }
  }
}

}  // namespace nosig::kernels::avx2

#endif  // NOSIG_HAVE_AVX2
