#pragma once

#include <cstddef>
#include <initializer_list>

#include "nosig/types.hpp"

namespace nosig {

/// Dense complex matrix, row-major. The workhorse value type for operators,
/// projectors, unitaries and density matrices. Arithmetic goes through the
/// runtime-dispatched kernels; spectral predicates live in linalg.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::initializer_list<cdouble> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<cdouble>& d);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  /// |u><v|
  static ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t size() const { return entries_.size(); }

  cdouble& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  cdouble operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  cdouble* data() { return entries_.data(); }
  const cdouble* data() const { return entries_.data(); }
  const ComplexVector& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cdouble trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cdouble a);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cdouble s) { return a *= s; }
  friend ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  ComplexVector apply(const ComplexVector& v) const;

  bool approx_equal(const ComplexMatrix& o, double tol = kTol) const;
  bool is_hermitian(double tol = kTol) const;
  bool is_unitary(double tol = kTol) const;
  bool is_projector(double tol = kTol) const;
  bool is_positive_semidefinite(double tol = kTol) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector entries_;
};

cdouble trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace nosig
