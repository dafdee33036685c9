#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Data-parallel inner loops for dense complex arithmetic. Every operation has
// a scalar reference implementation and (on x86-64 hosts that support it) an
// AVX2 variant; the active variant is chosen once at startup from CPUID and
// can be overridden for equivalence testing.

namespace nosig::kernels {

using cdouble = std::complex<double>;

enum class Isa { scalar, avx2 };

// Variant currently used by the dispatching entry points below.
Isa active_isa();

// Force a variant (no-op request to use avx2 on a CPU without it is ignored).
void force_isa(Isa isa);

// True when the binary carries AVX2 code paths and the CPU supports them.
bool avx2_available();

std::string_view isa_name(Isa isa);

// y[i] += a * x[i]
void axpy(std::size_t n, cdouble a, const cdouble* x, cdouble* y);

// x[i] *= a
void scale(std::size_t n, cdouble a, cdouble* x);

// sum_i conj(x[i]) * y[i]
cdouble dot_conj(std::size_t n, const cdouble* x, const cdouble* y);

// sum_i |x[i]|^2
double norm_sq(std::size_t n, const cdouble* x);

// y[i] *= x[i]
void hadamard(std::size_t n, const cdouble* x, cdouble* y);

// x[i] *= w[i] with real weights
void diag_scale(std::size_t n, const double* w, cdouble* x);

// C += A * B, row-major, A is m x k, B is k x n, C is m x n.
// C must be zeroed by the caller when a plain product is wanted.
void matmul_acc(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
                const cdouble* b, cdouble* c);

namespace scalar {
void axpy(std::size_t n, cdouble a, const cdouble* x, cdouble* y);
void scale(std::size_t n, cdouble a, cdouble* x);
cdouble dot_conj(std::size_t n, const cdouble* x, const cdouble* y);
double norm_sq(std::size_t n, const cdouble* x);
void hadamard(std::size_t n, const cdouble* x, cdouble* y);
void diag_scale(std::size_t n, const double* w, cdouble* x);
void matmul_acc(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
                const cdouble* b, cdouble* c);
}  // namespace scalar

#ifdef NOSIG_HAVE_AVX2
namespace avx2 {
void axpy(std::size_t n, cdouble a, const cdouble* x, cdouble* y);
void scale(std::size_t n, cdouble a, cdouble* x);
cdouble dot_conj(std::size_t n, const cdouble* x, const cdouble* y);
double norm_sq(std::size_t n, const cdouble* x);
void hadamard(std::size_t n, const cdouble* x, cdouble* y);
void diag_scale(std::size_t n, const double* w, cdouble* x);
void matmul_acc(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
                const cdouble* b, cdouble* c);
}  // namespace avx2
#endif

}  // namespace nosig::kernels
