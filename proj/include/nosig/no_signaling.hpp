#pragma once

#include <functional>
#include <variant>

#include "nosig/measurement.hpp"

namespace nosig {

/// One of the operations standard quantum mechanics permits on a single
/// factor of a composite system. Selective measurements are representable
/// but deliberately rejected by marginal_invariance; they are handled by
/// conditional_marginal, which models the classical side channel they need.
struct LocalOperation {
  enum class Kind { unitary, nonselective_measurement, kraus_channel,
                    selective_measurement };

  Kind kind;
  std::size_t target;  // factor index, 1-based
  std::variant<ComplexMatrix, MeasurementFamily, KrausChannel> payload;

  static LocalOperation unitary(ComplexMatrix u, std::size_t target);
  static LocalOperation nonselective(MeasurementFamily fam, std::size_t target);
  static LocalOperation kraus(KrausChannel ch, std::size_t target);
  static LocalOperation selective(ComplexMatrix projector, std::size_t target);
};

/// Apply a non-selective local operation (unitary / projective / Kraus).
DensityOperator apply_local(const DensityOperator& rho,
                            const LocalOperation& op);

/// Trace distance between the other party's reduced state before and after
/// a non-selective operation on `op.target`. The impossibility theorem says
/// this is zero; the returned number is the numerical witness.
double marginal_invariance(const DensityOperator& rho12,
                           const LocalOperation& op);

struct ConditionalMarginal {
  double probability;
  DensityOperator alice_state;
};

/// Alice's state conditioned on Bob's selective outcome on factor 2. This
/// generally differs from the unconditional marginal; the probability
/// weighted recombination over a complete family recovers it exactly.
ConditionalMarginal conditional_marginal(const DensityOperator& rho12,
                                         const ComplexMatrix& projector_on_b);

struct SignalingReport {
  double deviation = 0.0;  // total variation between Alice's conditional
                           // outcome distributions for Bob's two choices
  double mutual_information_bits = 0.0;
  double bias_bound_bits = 0.0;  // plug-in (Miller-Madow) bias scale
  std::size_t trials = 0;
  bool degenerate = false;  // sampler produced a single outcome
};

/// Alice's discrete outcome for one run given Bob's binary choice.
using ProtocolSampler = std::function<int(int bob_choice, Rng& rng)>;

/// Plug-in mutual information (bits) between Bob's uniformly random binary
/// choice and Alice's observed outcome. trials must be >= 1000.
SignalingReport channel_capacity_estimate(const ProtocolSampler& sampler,
                                          std::size_t trials,
                                          std::uint64_t seed);

/// Plug-in mutual information of a contingency table (rows: Bob, cols:
/// Alice), in bits.
double mutual_information_bits(
    const std::vector<std::vector<std::size_t>>& counts);

struct SweepResult {
  double max_deviation = 0.0;
  std::size_t cases = 0;
};

/// The executable form of the impossibility theorem: random bipartite states
/// against random non-selective operations on factor 2, returning the worst
/// marginal deviation seen.
SweepResult no_signaling_sweep(std::size_t cases, std::size_t min_factor_dim,
                               std::size_t max_factor_dim, std::uint64_t seed);

}  // namespace nosig
