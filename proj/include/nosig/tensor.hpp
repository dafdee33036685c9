#pragma once

#include <cstddef>
#include <vector>

#include "nosig/matrix.hpp"

namespace nosig {

/// Ordered list of subsystem dimensions for a composite space. Factor indices
/// are 1-based throughout the public API, matching the particle labels used
/// in the experiment reports.
class DimList {
 public:
  DimList() = default;
  explicit DimList(std::vector<std::size_t> dims);
  DimList(std::initializer_list<std::size_t> dims);

  std::size_t factors() const { return dims_.size(); }
  std::size_t total() const;
  std::size_t dim(std::size_t factor_1based) const;
  const std::vector<std::size_t>& dims() const { return dims_; }

  /// Throws StructuralError unless total() == ambient.
  void require_total(std::size_t ambient) const;
  void require_factor(std::size_t factor_1based) const;

  bool operator==(const DimList& o) const { return dims_ == o.dims_; }

 private:
  std::vector<std::size_t> dims_;
};

/// Tensor (Kronecker) product. Row/col dimensions multiply; the first factor
/// is the most significant index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Trace out every factor not listed in `keep` (1-based, ascending output
/// order follows the factor order). Preserves the trace.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimList& dims,
                            const std::vector<std::size_t>& keep);

/// I (x) ... (x) op (x) ... (x) I  with `op` in slot `target` (1-based).
ComplexMatrix embed(const ComplexMatrix& op, const DimList& dims,
                    std::size_t target);

}  // namespace nosig
