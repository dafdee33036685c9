#pragma once

#include "nosig/tensor.hpp"

namespace nosig {

class DensityOperator;

/// Normalized pure state over a composite space. Construction rejects
/// vectors whose norm is off by more than kNormRejectTol.
class QuantumState {
 public:
  QuantumState(ComplexVector amplitudes, DimList dims);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const DimList& dims() const { return dims_; }
  std::size_t dim() const { return amplitudes_.size(); }

  double norm() const;
  cdouble inner(const QuantumState& other) const;

  DensityOperator to_density() const;

 private:
  ComplexVector amplitudes_;
  DimList dims_;
};

/// Hermitian, positive semidefinite, unit-trace operator over a composite
/// space. Invariants are checked at construction within kTol.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, DimList dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const DimList& dims() const { return dims_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
  DimList dims_;
};

struct SchmidtDecomposition {
  std::vector<double> coefficients;       // nonnegative, descending
  std::vector<ComplexVector> left_basis;  // orthonormal in factor 1
  std::vector<ComplexVector> right_basis; // orthonormal in factor 2
};

/// Tr[P rho]; pure states are routed through |psi><psi|. The projector is
/// validated (idempotent Hermitian) within kTol.
double born_probability(const QuantumState& state,
                        const ComplexMatrix& projector);
double born_probability(const DensityOperator& rho,
                        const ComplexMatrix& projector);

/// Tr[Omega rho] for Hermitian Omega. Throws if the imaginary residue
/// exceeds kTol.
double expectation(const ComplexMatrix& observable, const DensityOperator& rho);
double expectation(const ComplexMatrix& observable, const QuantumState& state);

/// Biorthonormal decomposition of a two-factor pure state (SVD of the
/// amplitude matrix). Coefficients descending, squares summing to 1.
SchmidtDecomposition schmidt_decompose(const QuantumState& state);

/// Reconstruct sum_i p_i |l_i> (x) |r_i>.
ComplexVector schmidt_reconstruct(const SchmidtDecomposition& sd);

/// Partial trace packaged as a DensityOperator over the kept factors.
DensityOperator reduced_state(const DensityOperator& rho,
                              const std::vector<std::size_t>& keep);

}  // namespace nosig
