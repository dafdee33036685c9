#pragma once

#include <cstdint>

#include "nosig/state.hpp"

namespace nosig {

// Two-level polarization: basis index 0 = V, 1 = H.
inline constexpr std::size_t kPolV = 0;
inline constexpr std::size_t kPolH = 1;

/// Tag required to invoke the deliberately illegal state-dependent copier.
/// Nothing that models a legal operation accepts this type, so the device
/// cannot slip into a LocalOperation pipeline.
struct nonphysical_device_t {
  explicit nonphysical_device_t() = default;
};
inline constexpr nonphysical_device_t nonphysical_device{};

/// The impossible copier: maps an arbitrary pure polarization state to an
/// exact `copies`-fold product of itself. Nonlinear by construction.
QuantumState magic_clone(nonphysical_device_t, const QuantumState& photon,
                         std::size_t copies);

/// What a linear device pinned on the V/H basis actually does to an input
/// in span{V, H}: the linear extension of |V> -> |V>^copies,
/// |H> -> |H>^copies. For superposition inputs this is an entangled
/// many-photon state, never the product.
QuantumState linearity_extension(const QuantumState& photon,
                                 std::size_t copies);

/// |<target|output>|^2 of the linear extension against the magic product
/// state for the same input.
double linearity_extension_fidelity(const QuantumState& photon,
                                    std::size_t copies);

/// |<phi|psi>| - |<phi|psi>|^2. Strictly positive exactly when no single
/// evolution can clone both states (the overlap chain argument): the value
/// is zero only for identical or orthogonal rays.
double cloning_residual(const QuantumState& phi, const QuantumState& psi);

struct WignerCount {
  std::uint64_t equations;   // n^2 * r
  std::uint64_t unknowns;    // n + r + n*r
  bool overdetermined;       // equations > unknowns
  double ratio;              // equations / unknowns
};

/// Equation-counting argument against a generic self-replicating unit in an
/// n-dimensional space with an r-dimensional remainder.
WignerCount wigner_count(std::uint64_t n, std::uint64_t r);

}  // namespace nosig
