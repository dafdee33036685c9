#pragma once

#include <optional>

#include "nosig/no_signaling.hpp"
#include "nosig/protocols/cloning.hpp"

namespace nosig {

enum class ClonerKind { magic, linear };
enum class PolarizationBasis { linear_basis, circular_basis };

/// Amplification protocol: an entangled photon pair, Bob's basis choice, a
/// 4N-fold copier near Alice, and four N-photon analyzer beams (V, H, L, R).
struct FlashConfig {
  std::size_t n = 50;  // photons per beam; the copier emits 4n
  ClonerKind cloner = ClonerKind::magic;
  // When set, only this choice's branches are tabulated; the signaling
  // estimate always randomizes the choice.
  std::optional<PolarizationBasis> bob_choice;
  std::size_t trials = 10000;
  std::uint64_t rng_seed = 0;
  // Demand the exact joint-distribution computation (linear cloner only);
  // fails for 4n > 12 instead of silently sampling.
  bool require_exact = false;
};

/// Clicks per analyzer beam in one trial. Every trial processes exactly 4n
/// photons (n per beam); clicks count the photons found aligned with the
/// beam's analyzer, so v + h + r + l <= photons.
struct DetectorCounts {
  std::uint64_t v = 0, h = 0, r = 0, l = 0;
  std::uint64_t photons = 0;
};

struct DetectorMeans {
  double v = 0, h = 0, r = 0, l = 0;
};

struct FlashBranch {
  PolarizationBasis choice;
  std::string bob_outcome;  // "V", "H", "R" or "L"
  double outcome_probability;
  DetectorMeans expected;
  DetectorMeans sampled_mean;
  std::size_t trials = 0;
};

struct FlashReport {
  std::size_t n = 0;
  ClonerKind cloner;
  std::vector<FlashBranch> branches;
  SignalingReport signaling;
  // Total variation distance between the exact joint count distributions
  // for Bob's two choices (linear cloner, 4n <= 12 only).
  std::optional<double> exact_choice_tv;
};

FlashReport run_flash(const FlashConfig& cfg);

/// Largest exact joint simulation: 4n clones.
inline constexpr std::size_t kFlashExactMaxClones = 12;

}  // namespace nosig
