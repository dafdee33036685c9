#include "nosig/kernels.hpp"

#include <atomic>

namespace nosig::kernels {

namespace {

struct Table {
  Isa isa;
  void (*axpy)(std::size_t, cdouble, const cdouble*, cdouble*);
  void (*scale)(std::size_t, cdouble, cdouble*);
  cdouble (*dot_conj)(std::size_t, const cdouble*, const cdouble*);
  double (*norm_sq)(std::size_t, const cdouble*);
  void (*hadamard)(std::size_t, const cdouble*, cdouble*);
  void (*diag_scale)(std::size_t, const double*, cdouble*);
  void (*matmul_acc)(std::size_t, std::size_t, std::size_t, const cdouble*,
                     const cdouble*, cdouble*);
};

constexpr Table kScalarTable = {
    Isa::scalar,        scalar::axpy,     scalar::scale,
    scalar::dot_conj,   scalar::norm_sq,  scalar::hadamard,
    scalar::diag_scale, scalar::matmul_acc,
};

#ifdef NOSIG_HAVE_AVX2
constexpr Table kAvx2Table = {
    Isa::avx2,        avx2::axpy,     avx2::scale,
    avx2::dot_conj,   avx2::norm_sq,  avx2::hadamard,
    avx2::diag_scale, avx2::matmul_acc,
};
#endif

bool cpu_has_avx2() {
#ifdef NOSIG_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table* default_table() {
#ifdef NOSIG_HAVE_AVX2
  if (cpu_has_avx2()) return &kAvx2Table;
#endif
  return &kScalarTable;
}

std::atomic<const Table*> g_table{default_table()};

}  // namespace

Isa active_isa() { return g_table.load(std::memory_order_relaxed)->isa; }

bool avx2_available() { return cpu_has_avx2(); }

void force_isa(Isa isa) {
#ifdef NOSIG_HAVE_AVX2
  if (isa == Isa::avx2 && cpu_has_avx2()) {
    g_table.store(&kAvx2Table, std::memory_order_relaxed);
    return;
  }
#endif
  if (isa == Isa::scalar)
    g_table.store(&kScalarTable, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

void axpy(std::size_t n, cdouble a, const cdouble* x, cdouble* y) {
  g_table.load(std::memory_order_relaxed)->axpy(n, a, x, y);
}
void scale(std::size_t n, cdouble a, cdouble* x) {
  g_table.load(std::memory_order_relaxed)->scale(n, a, x);
}
cdouble dot_conj(std::size_t n, const cdouble* x, const cdouble* y) {
  return g_table.load(std::memory_order_relaxed)->dot_conj(n, x, y);
}
double norm_sq(std::size_t n, const cdouble* x) {
  return g_table.load(std::memory_order_relaxed)->norm_sq(n, x);
}
void hadamard(std::size_t n, const cdouble* x, cdouble* y) {
  g_table.load(std::memory_order_relaxed)->hadamard(n, x, y);
}
void diag_scale(std::size_t n, const double* w, cdouble* x) {
  g_table.load(std::memory_order_relaxed)->diag_scale(n, w, x);
}
void matmul_acc(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
                const cdouble* b, cdouble* c) {
  g_table.load(std::memory_order_relaxed)->matmul_acc(m, k, n, a, b, c);
}

}  // namespace nosig::kernels
