#pragma once

#include "nosig/matrix.hpp"
#include "nosig/rng.hpp"

namespace nosig {

/// Matrix with iid standard complex Gaussian entries.
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-ish random unitary (QR of a Ginibre matrix with positive diagonal R).
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

/// Random full-rank density matrix G G^+ / tr.
ComplexMatrix random_density(std::size_t n, Rng& rng);

/// Haar random unit vector.
ComplexVector random_state_vector(std::size_t n, Rng& rng);

/// Complete family of orthogonal projectors from a random unitary's columns,
/// grouped into `blocks` eigenmanifolds (rank-1 when blocks == n).
std::vector<ComplexMatrix> random_projector_family(std::size_t n,
                                                   std::size_t blocks,
                                                   Rng& rng);

/// Kraus operator family A_i with sum_i A_i A_i^+ = I, to be applied as
/// rho -> sum_i A_i^+ rho A_i.
std::vector<ComplexMatrix> random_kraus_operators(std::size_t n,
                                                  std::size_t count, Rng& rng);

}  // namespace nosig
