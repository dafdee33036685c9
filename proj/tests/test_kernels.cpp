#include <vector>

#include "doctest.h"
#include "nosig/kernels.hpp"
#include "nosig/rng.hpp"

using namespace nosig;

namespace {

ComplexVector random_vec(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  for (auto& x : v) x = cdouble(rng.normal(), rng.normal());
  return v;
}

struct IsaGuard {
  ~IsaGuard() { kernels::force_isa(kernels::Isa::scalar); restore(); }
  static void restore() {
    if (kernels::avx2_available()) kernels::force_isa(kernels::Isa::avx2);
  }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar reference basics") {
  using namespace kernels;
  ComplexVector x{{1, 2}, {3, -1}};
  ComplexVector y{{0, 1}, {2, 0}};
  scalar::axpy(2, cdouble(2, 0), x.data(), y.data());
  CHECK(y[0] == cdouble(2, 5));
  CHECK(y[1] == cdouble(8, -2));

  CHECK(scalar::norm_sq(2, x.data()) == doctest::Approx(1 + 4 + 9 + 1));

  const cdouble d = scalar::dot_conj(2, x.data(), x.data());
  CHECK(d.real() == doctest::Approx(15.0));
  CHECK(d.imag() == doctest::Approx(0.0));
}

TEST_CASE("matmul_acc against hand result") {
  // (1+i) * identity times a 2x2
  ComplexVector a{{1, 1}, {0, 0}, {0, 0}, {1, 1}};
  ComplexVector b{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
  ComplexVector c(4);
  kernels::scalar::matmul_acc(2, 2, 2, a.data(), b.data(), c.data());
  CHECK(c[0] == cdouble(1, 1));
  CHECK(c[3] == cdouble(4, 4));
}

TEST_CASE("avx2 variants match the scalar reference") {
  if (!kernels::avx2_available()) {
    MESSAGE("no AVX2 on this host; dispatch stays scalar");
    return;
  }
  Rng rng(42);
  // odd lengths exercise the tail paths
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u, 128u, 255u}) {
    ComplexVector x = random_vec(n, rng);
    ComplexVector y = random_vec(n, rng);
    const cdouble a(rng.normal(), rng.normal());

    ComplexVector y1 = y, y2 = y;
    kernels::scalar::axpy(n, a, x.data(), y1.data());
    kernels::avx2::axpy(n, a, x.data(), y2.data());
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(y1[i] - y2[i]) < 1e-12);

    ComplexVector s1 = x, s2 = x;
    kernels::scalar::scale(n, a, s1.data());
    kernels::avx2::scale(n, a, s2.data());
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(s1[i] - s2[i]) < 1e-12);

    const cdouble d1 = kernels::scalar::dot_conj(n, x.data(), y.data());
    const cdouble d2 = kernels::avx2::dot_conj(n, x.data(), y.data());
    CHECK(std::abs(d1 - d2) < 1e-10 * (1.0 + std::abs(d1)));

    CHECK(kernels::scalar::norm_sq(n, x.data()) ==
          doctest::Approx(kernels::avx2::norm_sq(n, x.data())).epsilon(1e-12));

    ComplexVector h1 = y, h2 = y;
    kernels::scalar::hadamard(n, x.data(), h1.data());
    kernels::avx2::hadamard(n, x.data(), h2.data());
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(h1[i] - h2[i]) < 1e-12);

    std::vector<double> w(n);
    for (auto& v : w) v = rng.normal();
    ComplexVector g1 = x, g2 = x;
    kernels::scalar::diag_scale(n, w.data(), g1.data());
    kernels::avx2::diag_scale(n, w.data(), g2.data());
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(g1[i] - g2[i]) < 1e-12);
  }

  for (std::size_t m : {1u, 3u, 5u}) {
    for (std::size_t k : {2u, 4u, 7u}) {
      for (std::size_t n : {1u, 3u, 8u}) {
        ComplexVector a = random_vec(m * k, rng);
        ComplexVector b = random_vec(k * n, rng);
        ComplexVector c1(m * n), c2(m * n);
        kernels::scalar::matmul_acc(m, k, n, a.data(), b.data(), c1.data());
        kernels::avx2::matmul_acc(m, k, n, a.data(), b.data(), c2.data());
        for (std::size_t i = 0; i < m * n; ++i)
          CHECK(std::abs(c1[i] - c2[i]) < 1e-10);
      }
    }
  }
}

TEST_CASE("runtime dispatch switches tables") {
  IsaGuard guard;
  kernels::force_isa(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  if (kernels::avx2_available()) {
    kernels::force_isa(kernels::Isa::avx2);
    CHECK(kernels::active_isa() == kernels::Isa::avx2);
  }
  ComplexVector x{{1, 0}, {0, 1}, {2, 2}};
  CHECK(kernels::norm_sq(3, x.data()) == doctest::Approx(10.0));
}

}  // TEST_SUITE
