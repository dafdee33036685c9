#include "nosig/kernels.hpp"

namespace nosig::kernels::scalar {

void axpy(std::size_t n, cdouble a, const cdouble* x, cdouble* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(std::size_t n, cdouble a, cdouble* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

cdouble dot_conj(std::size_t n, const cdouble* x, const cdouble* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

double norm_sq(std::size_t n, const cdouble* x) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void hadamard(std::size_t n, const cdouble* x, cdouble* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= x[i];
}

void diag_scale(std::size_t n, const double* w, cdouble* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= w[i];
}

void matmul_acc(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
                const cdouble* b, cdouble* c) {
  // i-p-j order so the inner loop is an axpy over a contiguous row of B.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const cdouble aip = a[i * k + p];
      if (aip == cdouble{}) continue;
      const cdouble* brow = b + p * n;
      cdouble* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

}  // namespace nosig::kernels::scalar
