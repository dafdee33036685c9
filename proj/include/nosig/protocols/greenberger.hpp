#pragma once

#include "nosig/no_signaling.hpp"

namespace nosig {

/// Two entangled photons plus a macroscopic phase shifter prepared in a cat
/// state; the shifter agent either evolves legally or applies the forbidden
/// "rotate |v> into |u>" map.
struct GreenbergerConfig {
  double phase_alpha = 0.0;
  double phase_beta = 0.0;
  double phase_gamma = 0.0;
  bool legal_evolution = true;  // false applies the nonunitary map
  std::size_t trials = 10000;   // for the signaling estimate
  std::uint64_t rng_seed = 0;
};

struct GreenbergerReport {
  double p_h_dprime = 0.0;  // detectors (h, d') fire
  double p_g_cprime = 0.0;  // detectors (g, c') fire
  ComplexMatrix alice_marginal;  // photon-1 reduced state
  // trace distance of the photon-1 marginal from the maximally mixed state
  double marginal_deviation = 0.0;
  SignalingReport signaling;
};

/// The photon pair + shifter state as it nears the detectors, with the
/// phase evolution already accumulated: amplitudes on the basis
/// {h,g} (x) {c',d'} (x) {u,v}.
QuantumState greenberger_pre_measurement_state(double alpha, double beta);

GreenbergerReport run_greenberger(const GreenbergerConfig& cfg);

/// The distilled counterexample: a spin singlet and the forbidden map that
/// rotates one of Bob's spin states into the other with phase gamma.
/// Returns the probability that Alice's spin measurement along
/// d = (cos gamma, sin gamma, 0) yields -1.
double run_epr_rotation(double gamma, bool apply_forbidden_map);

}  // namespace nosig
