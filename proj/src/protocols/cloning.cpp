#include "nosig/protocols/cloning.hpp"

#include <cmath>

#include "nosig/kernels.hpp"

namespace nosig {

namespace {

DimList product_dims(std::size_t copies) {
  std::vector<std::size_t> d(copies, 2);
  return DimList(d);
}

ComplexVector nfold(const ComplexVector& single, std::size_t copies) {
  ComplexVector out = single;
  for (std::size_t i = 1; i < copies; ++i) out = kron(out, single);
  return out;
}

}  // namespace

QuantumState magic_clone(nonphysical_device_t, const QuantumState& photon,
                         std::size_t copies) {
  if (photon.dim() != 2)
    throw StructuralError("cloner input must be a single polarization qubit");
  if (copies < 1) throw StructuralError("need >= 1 copy");
  return {nfold(photon.amplitudes(), copies), product_dims(copies)};
}

QuantumState linearity_extension(const QuantumState& photon,
                                 std::size_t copies) {
  if (photon.dim() != 2)
    throw StructuralError("cloner input must be a single polarization qubit");
  if (copies < 1) throw StructuralError("need >= 1 copy");
  const cdouble cv = photon.amplitudes()[kPolV];
  const cdouble ch = photon.amplitudes()[kPolH];
  // cv |V...V> + ch |H...H>
  const std::size_t dim = std::size_t{1} << copies;
  ComplexVector amps(dim);
  amps[0] = cv;
  amps[dim - 1] = ch;
  return {std::move(amps), product_dims(copies)};
}

double linearity_extension_fidelity(const QuantumState& photon,
                                    std::size_t copies) {
  const QuantumState ext = linearity_extension(photon, copies);
  const QuantumState target = magic_clone(nonphysical_device, photon, copies);
  return std::norm(ext.inner(target));
}

double cloning_residual(const QuantumState& phi, const QuantumState& psi) {
  if (phi.dim() != psi.dim())
    throw StructuralError("cloning_residual: dimension mismatch");
  const double overlap = std::abs(phi.inner(psi));
  return overlap - overlap * overlap;
}

WignerCount wigner_count(std::uint64_t n, std::uint64_t r) {
  if (n < 1 || r < 1) throw StructuralError("wigner_count needs n, r >= 1");
  WignerCount out;
  out.equations = n * n * r;
  out.unknowns = n + r + n * r;
  out.overdetermined = out.equations > out.unknowns;
  out.ratio = static_cast<double>(out.equations) /
              static_cast<double>(out.unknowns);
  return out;
}

}  // namespace nosig
