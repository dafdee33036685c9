#include "nosig/linalg.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace nosig {

namespace {

using EigenMat =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                  Eigen::RowMajor>;

Eigen::Map<const EigenMat> to_eigen(const ComplexMatrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

ComplexMatrix from_eigen(const EigenMat& e) {
  ComplexMatrix m(static_cast<std::size_t>(e.rows()),
                  static_cast<std::size_t>(e.cols()));
  for (Eigen::Index r = 0; r < e.rows(); ++r)
    for (Eigen::Index c = 0; c < e.cols(); ++c)
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
  return m;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h) {
  if (!h.is_square())
    throw StructuralError("hermitian_eig requires a square matrix");
  Eigen::SelfAdjointEigenSolver<EigenMat> solver(to_eigen(h));
  if (solver.info() != Eigen::Success)
    throw ContractError("hermitian eigensolver failed to converge");
  HermitianEig out;
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = from_eigen(solver.eigenvectors());
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.is_square())
    throw StructuralError("hermitian_eigenvalues requires a square matrix");
  Eigen::SelfAdjointEigenSolver<EigenMat> solver(to_eigen(h),
                                                 Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ContractError("hermitian eigensolver failed to converge");
  return {solver.eigenvalues().data(),
          solver.eigenvalues().data() + solver.eigenvalues().size()};
}

Svd svd(const ComplexMatrix& a) {
  Eigen::JacobiSVD<EigenMat> solver(
      to_eigen(a), Eigen::ComputeThinU | Eigen::ComputeThinV);
  Svd out;
  out.values.assign(solver.singularValues().data(),
                    solver.singularValues().data() +
                        solver.singularValues().size());
  out.u = from_eigen(solver.matrixU());
  out.v = from_eigen(solver.matrixV());
  return out;
}

double nuclear_norm(const ComplexMatrix& a) {
  Eigen::JacobiSVD<EigenMat> solver(to_eigen(a));
  return solver.singularValues().sum();
}

ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double t) {
  auto eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  // V diag(e^{i t lambda}) V^+
  ComplexMatrix phased = eig.vectors;
  for (std::size_t c = 0; c < n; ++c) {
    const cdouble phase = std::exp(cdouble(0.0, t * eig.values[c]));
    for (std::size_t r = 0; r < n; ++r) phased(r, c) *= phase;
  }
  return phased * eig.vectors.adjoint();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix diff = a;
  diff -= b;
  double sum = 0.0;
  for (double v : hermitian_eigenvalues(diff)) sum += std::abs(v);
  return 0.5 * sum;
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix& a) {
  Eigen::HouseholderQR<EigenMat> qr(to_eigen(a));
  EigenMat q = qr.householderQ() * EigenMat::Identity(a.rows(), a.cols());
  EigenMat r = qr.matrixQR().topRows(a.cols());
  for (Eigen::Index c = 0; c < q.cols(); ++c) {
    const std::complex<double> d = r(c, c);
    if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
  }
  return from_eigen(q);
}

}  // namespace nosig
