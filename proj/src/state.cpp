#include "nosig/state.hpp"

#include <algorithm>
#include <cmath>

#include "nosig/kernels.hpp"
#include "nosig/linalg.hpp"

namespace nosig {

QuantumState::QuantumState(ComplexVector amplitudes, DimList dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  dims_.require_total(amplitudes_.size());
  const double n = norm();
  if (std::abs(n - 1.0) > kNormRejectTol)
    throw ContractError("state norm deviates from 1 by " +
                        std::to_string(std::abs(n - 1.0)));
}

double QuantumState::norm() const {
  return std::sqrt(kernels::norm_sq(amplitudes_.size(), amplitudes_.data()));
}

cdouble QuantumState::inner(const QuantumState& other) const {
  if (dim() != other.dim()) throw StructuralError("inner: dimension mismatch");
  return kernels::dot_conj(dim(), amplitudes_.data(),
                           other.amplitudes_.data());
}

DensityOperator QuantumState::to_density() const {
  return {ComplexMatrix::outer(amplitudes_, amplitudes_), dims_};
}

DensityOperator::DensityOperator(ComplexMatrix matrix, DimList dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (!matrix_.is_square())
    throw StructuralError("density operator must be square");
  dims_.require_total(matrix_.rows());
  if (!matrix_.is_hermitian(kTol))
    throw ContractError("density operator is not Hermitian");
  if (std::abs(matrix_.trace() - cdouble(1.0)) > kTol)
    throw ContractError("density operator trace differs from 1");
  if (!matrix_.is_positive_semidefinite(kTol))
    throw ContractError("density operator has a negative eigenvalue");
}

namespace {

void require_projector(const ComplexMatrix& p) {
  if (!p.is_projector(kTol))
    throw ContractError("operator is not an orthogonal projector");
}

}  // namespace

double born_probability(const DensityOperator& rho,
                        const ComplexMatrix& projector) {
  if (projector.rows() != rho.dim())
    throw StructuralError("projector dimension mismatch");
  require_projector(projector);
  const double p = trace_product(projector, rho.matrix()).real();
  return std::clamp(p, 0.0, 1.0);
}

double born_probability(const QuantumState& state,
                        const ComplexMatrix& projector) {
  return born_probability(state.to_density(), projector);
}

double expectation(const ComplexMatrix& observable,
                   const DensityOperator& rho) {
  if (observable.rows() != rho.dim())
    throw StructuralError("observable dimension mismatch");
  if (!observable.is_hermitian(kTol))
    throw ContractError("observable is not Hermitian");
  const cdouble v = trace_product(observable, rho.matrix());
  if (std::abs(v.imag()) > kTol)
    throw ContractError("expectation value has a large imaginary residue");
  return v.real();
}

double expectation(const ComplexMatrix& observable, const QuantumState& state) {
  return expectation(observable, state.to_density());
}

SchmidtDecomposition schmidt_decompose(const QuantumState& state) {
  if (state.dims().factors() != 2)
    throw StructuralError("Schmidt decomposition needs exactly two factors");
  const std::size_t d1 = state.dims().dim(1);
  const std::size_t d2 = state.dims().dim(2);

  // Reshape amplitudes into a d1 x d2 matrix and take its SVD.
  ComplexMatrix a(d1, d2, state.amplitudes());
  Svd s = svd(a);

  SchmidtDecomposition out;
  const std::size_t rank = s.values.size();
  out.coefficients = s.values;
  for (std::size_t k = 0; k < rank; ++k) {
    ComplexVector left(d1), right(d2);
    for (std::size_t r = 0; r < d1; ++r) left[r] = s.u(r, k);
    // A = U S V^+, so the right vectors are conj(V) columns.
    for (std::size_t r = 0; r < d2; ++r) right[r] = std::conj(s.v(r, k));
    out.left_basis.push_back(std::move(left));
    out.right_basis.push_back(std::move(right));
  }
  return out;
}

ComplexVector schmidt_reconstruct(const SchmidtDecomposition& sd) {
  if (sd.left_basis.empty()) return {};
  ComplexVector out(sd.left_basis[0].size() * sd.right_basis[0].size());
  for (std::size_t k = 0; k < sd.coefficients.size(); ++k) {
    ComplexVector term = kron(sd.left_basis[k], sd.right_basis[k]);
    kernels::axpy(out.size(), sd.coefficients[k], term.data(), out.data());
  }
  return out;
}

DensityOperator reduced_state(const DensityOperator& rho,
                              const std::vector<std::size_t>& keep) {
  ComplexMatrix red = partial_trace(rho.matrix(), rho.dims(), keep);
  std::vector<std::size_t> kept_dims;
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t f : sorted) kept_dims.push_back(rho.dims().dim(f));
  return {std::move(red), DimList(kept_dims)};
}

}  // namespace nosig
