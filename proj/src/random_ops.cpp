#include "nosig/random_ops.hpp"

#include <cmath>

#include "nosig/kernels.hpp"
#include "nosig/linalg.hpp"

namespace nosig {

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    m.data()[i] = cdouble(rng.normal() * s, rng.normal() * s);
  return m;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  return orthonormalize_columns(random_ginibre(n, n, rng));
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix g = random_ginibre(n, n, rng);
  ComplexMatrix h = g;
  h += g.adjoint();
  h *= 0.5;
  return h;
}

ComplexMatrix random_density(std::size_t n, Rng& rng) {
  ComplexMatrix g = random_ginibre(n, n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace();
  return rho;
}

ComplexVector random_state_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  const double s = 1.0 / std::sqrt(2.0);
  for (auto& a : v) a = cdouble(rng.normal() * s, rng.normal() * s);
  const double norm = std::sqrt(kernels::norm_sq(n, v.data()));
  kernels::scale(n, 1.0 / norm, v.data());
  return v;
}

std::vector<ComplexMatrix> random_projector_family(std::size_t n,
                                                   std::size_t blocks,
                                                   Rng& rng) {
  if (blocks < 1 || blocks > n)
    throw StructuralError("projector family needs 1 <= blocks <= dim");
  const ComplexMatrix u = random_unitary(n, rng);
  std::vector<ComplexMatrix> family;
  std::size_t col = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    // distribute columns as evenly as possible
    const std::size_t take = n / blocks + (b < n % blocks ? 1 : 0);
    ComplexMatrix p(n, n);
    for (std::size_t c = col; c < col + take; ++c) {
      ComplexVector v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = u(r, c);
      p += ComplexMatrix::outer(v, v);
    }
    family.push_back(std::move(p));
    col += take;
  }
  return family;
}

std::vector<ComplexMatrix> random_kraus_operators(std::size_t n,
                                                  std::size_t count,
                                                  Rng& rng) {
  if (count < 1) throw StructuralError("kraus family needs >= 1 operator");
  // Stinespring: orthonormal columns of a (count*n) x n block matrix give
  // C_i with sum C_i^+ C_i = I; the stored operators are A_i = C_i^+.
  const ComplexMatrix iso =
      orthonormalize_columns(random_ginibre(count * n, n, rng));
  std::vector<ComplexMatrix> ops;
  for (std::size_t b = 0; b < count; ++b) {
    ComplexMatrix c(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t cidx = 0; cidx < n; ++cidx)
        c(r, cidx) = iso(b * n + r, cidx);
    ops.push_back(c.adjoint());
  }
  return ops;
}

}  // namespace nosig
