#include "nosig/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "nosig/kernels.hpp"
#include "nosig/linalg.hpp"

namespace nosig {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             ComplexVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw StructuralError("matrix entries length does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<cdouble> entries)
    : ComplexMatrix(rows, cols, ComplexVector(entries)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cdouble>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& u,
                                   const ComplexVector& v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

cdouble ComplexMatrix::trace() const {
  if (!is_square()) throw StructuralError("trace of a non-square matrix");
  cdouble t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::norm_sq(entries_.size(), entries_.data()));
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw StructuralError("matrix addition shape mismatch");
  kernels::axpy(entries_.size(), 1.0, o.entries_.data(), entries_.data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw StructuralError("matrix subtraction shape mismatch");
  kernels::axpy(entries_.size(), -1.0, o.entries_.data(), entries_.data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble a) {
  kernels::scale(entries_.size(), a, entries_.data());
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw StructuralError("matrix product shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  kernels::matmul_acc(a.rows(), a.cols(), b.cols(), a.data(), b.data(),
                      c.data());
  return c;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& v) const {
  if (v.size() != cols_)
    throw StructuralError("matrix-vector shape mismatch");
  ComplexVector out(rows_);
  kernels::matmul_acc(rows_, cols_, 1, data(), v.data(), out.data());
  return out;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& o, double tol) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (std::abs(entries_[i] - o.entries_[i]) > tol) return false;
  return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol)
        return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return (adjoint() * (*this)).approx_equal(identity(rows_), tol);
}

bool ComplexMatrix::is_projector(double tol) const {
  if (!is_hermitian(tol)) return false;
  return ((*this) * (*this)).approx_equal(*this, tol);
}

bool ComplexMatrix::is_positive_semidefinite(double tol) const {
  if (!is_hermitian(tol)) return false;
  auto eig = hermitian_eigenvalues(*this);
  return eig.empty() || *std::min_element(eig.begin(), eig.end()) >= -tol;
}

cdouble trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw StructuralError("trace_product shape mismatch");
  cdouble t = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t += a(r, c) * b(c, r);
  return t;
}

}  // namespace nosig
