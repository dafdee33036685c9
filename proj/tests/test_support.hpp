#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "nosig/matrix.hpp"
#include "nosig/tensor.hpp"

// Test-side oracles. These deliberately avoid the library's linear-algebra
// paths (kernels, Eigen wrappers) so that implementation and oracle fail
// independently.

namespace testsupport {

using nosig::cdouble;
using nosig::ComplexMatrix;
using nosig::ComplexVector;

inline ComplexMatrix naive_multiply(const ComplexMatrix& a,
                                    const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cdouble s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

struct JacobiEig {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns
};

/// Cyclic Jacobi diagonalization for Hermitian matrices, written from the
/// 2x2 rotation formulas; reference-quality for the small dimensions used
/// in tests.
inline JacobiEig jacobi_hermitian_eig(ComplexMatrix a) {
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cdouble apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-18) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
        const double c = std::cos(theta), s = std::sin(theta);
        const cdouble phase = apq / r;  // e^{i phi}
        // J is the identity outside rows/cols p,q with
        // J(p,p)=c, J(p,q)=-s*phase, J(q,p)=s*conj(phase), J(q,q)=c;
        // apply A <- J^+ A J and V <- V J touching only those lines.
        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const cdouble akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + s * std::conj(phase) * akq;
          a(k, q) = -s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^+ A
          const cdouble apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + s * phase * aqk;
          a(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V J
          const cdouble vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(phase) * vkq;
          v(k, q) = -s * phase * vkp + c * vkq;
        }
      }
  }
  JacobiEig out;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    for (std::size_t rIdx = 0; rIdx < n; ++rIdx)
      out.vectors(rIdx, k) = v(rIdx, order[k]);
  }
  return out;
}

/// Element-indexing partial trace: decompose flat indices digit by digit and
/// sum over the traced digits.
inline ComplexMatrix brute_force_partial_trace(
    const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
    const std::vector<std::size_t>& keep_1based) {
  const std::size_t nf = dims.size();
  auto digits_of = [&](std::size_t flat) {
    std::vector<std::size_t> d(nf);
    for (std::size_t f = nf; f-- > 0;) {
      d[f] = flat % dims[f];
      flat /= dims[f];
    }
    return d;
  };
  std::vector<bool> kept(nf, false);
  for (std::size_t f : keep_1based) kept[f - 1] = true;
  std::size_t dkeep = 1;
  for (std::size_t f = 0; f < nf; ++f)
    if (kept[f]) dkeep *= dims[f];

  auto project = [&](const std::vector<std::size_t>& digs) {
    std::size_t out = 0;
    for (std::size_t f = 0; f < nf; ++f)
      if (kept[f]) out = out * dims[f] + digs[f];
    return out;
  };

  const std::size_t full = rho.rows();
  ComplexMatrix out(dkeep, dkeep);
  for (std::size_t r = 0; r < full; ++r) {
    const auto dr = digits_of(r);
    for (std::size_t c = 0; c < full; ++c) {
      const auto dc = digits_of(c);
      bool traced_match = true;
      for (std::size_t f = 0; f < nf; ++f)
        if (!kept[f] && dr[f] != dc[f]) traced_match = false;
      if (traced_match) out(project(dr), project(dc)) += rho(r, c);
    }
  }
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testsupport
