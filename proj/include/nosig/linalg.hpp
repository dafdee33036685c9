#pragma once

#include <vector>

#include "nosig/matrix.hpp"

// Spectral routines for the small dense matrices this library works with.
// Backed by Eigen; everything else in the library talks to these wrappers
// rather than to Eigen directly.

namespace nosig {

struct HermitianEig {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are the eigenvectors
};

struct Svd {
  std::vector<double> values;  // descending, nonnegative
  ComplexMatrix u;             // left singular vectors (columns)
  ComplexMatrix v;             // right singular vectors (columns), A = U S V^+
};

HermitianEig hermitian_eig(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

Svd svd(const ComplexMatrix& a);

/// Sum of singular values.
double nuclear_norm(const ComplexMatrix& a);

/// exp(i * t * H) for Hermitian H (unitary for real t).
ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double t);

/// Half the trace norm of (a - b); both arguments Hermitian.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Thin QR orthonormalization: returns Q with the same column span and
/// Q^+ Q = I, with phases fixed so the result is deterministic.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& a);

}  // namespace nosig
