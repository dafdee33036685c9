#include "nosig/tensor.hpp"

#include <algorithm>

namespace nosig {

DimList::DimList(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw StructuralError("DimList needs at least one factor");
  for (std::size_t d : dims_)
    if (d == 0) throw StructuralError("subsystem dimensions must be positive");
}

DimList::DimList(std::initializer_list<std::size_t> dims)
    : DimList(std::vector<std::size_t>(dims)) {}

std::size_t DimList::total() const {
  std::size_t t = 1;
  for (std::size_t d : dims_) t *= d;
  return t;
}

std::size_t DimList::dim(std::size_t factor_1based) const {
  require_factor(factor_1based);
  return dims_[factor_1based - 1];
}

void DimList::require_total(std::size_t ambient) const {
  if (total() != ambient)
    throw StructuralError("product of subsystem dimensions (" +
                          std::to_string(total()) +
                          ") does not match the ambient dimension (" +
                          std::to_string(ambient) + ")");
}

void DimList::require_factor(std::size_t factor_1based) const {
  if (factor_1based < 1 || factor_1based > dims_.size())
    throw StructuralError("factor index " + std::to_string(factor_1based) +
                          " out of range (1.." +
                          std::to_string(dims_.size()) + ")");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cdouble f = a(ar, ac);
      if (f == cdouble{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] = a[i] * b[j];
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimList& dims,
                            const std::vector<std::size_t>& keep) {
  if (!rho.is_square()) throw StructuralError("partial_trace needs square rho");
  dims.require_total(rho.rows());
  if (keep.empty()) throw StructuralError("keep set must be nonempty");

  const std::size_t nf = dims.factors();
  std::vector<bool> kept(nf, false);
  for (std::size_t f : keep) {
    dims.require_factor(f);
    if (kept[f - 1]) throw StructuralError("duplicate factor in keep set");
    kept[f - 1] = true;
  }

  std::vector<std::size_t> keep_dims, trace_dims, keep_idx, trace_idx;
  for (std::size_t f = 0; f < nf; ++f) {
    if (kept[f]) {
      keep_dims.push_back(dims.dims()[f]);
      keep_idx.push_back(f);
    } else {
      trace_dims.push_back(dims.dims()[f]);
      trace_idx.push_back(f);
    }
  }

  // Strides of each factor in the full row-major index.
  std::vector<std::size_t> stride(nf, 1);
  for (std::size_t f = nf; f-- > 1;)
    stride[f - 1] = stride[f] * dims.dims()[f];

  std::size_t dkeep = 1;
  for (std::size_t d : keep_dims) dkeep *= d;
  std::size_t dtrace = 1;
  for (std::size_t d : trace_dims) dtrace *= d;

  auto expand = [](std::size_t flat, const std::vector<std::size_t>& fdims,
                   const std::vector<std::size_t>& fidx,
                   const std::vector<std::size_t>& stride) {
    std::size_t full = 0;
    for (std::size_t f = fdims.size(); f-- > 0;) {
      full += (flat % fdims[f]) * stride[fidx[f]];
      flat /= fdims[f];
    }
    return full;
  };

  ComplexMatrix out(dkeep, dkeep);
  for (std::size_t kr = 0; kr < dkeep; ++kr) {
    const std::size_t base_r = expand(kr, keep_dims, keep_idx, stride);
    for (std::size_t kc = 0; kc < dkeep; ++kc) {
      const std::size_t base_c = expand(kc, keep_dims, keep_idx, stride);
      cdouble sum = 0.0;
      for (std::size_t t = 0; t < dtrace; ++t) {
        const std::size_t off = expand(t, trace_dims, trace_idx, stride);
        sum += rho(base_r + off, base_c + off);
      }
      out(kr, kc) = sum;
    }
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const DimList& dims,
                    std::size_t target) {
  dims.require_factor(target);
  if (!op.is_square() || op.rows() != dims.dim(target))
    throw StructuralError("embedded operator does not match the target factor");
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t f = 1; f <= dims.factors(); ++f) {
    if (f == target)
      out = kron(out, op);
    else
      out = kron(out, ComplexMatrix::identity(dims.dim(f)));
  }
  return out;
}

}  // namespace nosig
