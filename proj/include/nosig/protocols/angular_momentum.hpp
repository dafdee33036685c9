#pragma once

#include "nosig/measurement.hpp"

namespace nosig {

/// The conservation-law signaling argument, run end to end: total spin
/// squared of the two-particle singlet before and after a nonselective
/// z measurement of one particle, plus the obstruction that the additive
/// conservation law itself puts in the way of the ideal measurement the
/// argument assumes.
struct AngularMomentumReport {
  double s2_singlet = 0.0;         // <S^2> on the singlet, units hbar^2
  double s2_after_measurement = 0.0;  // <S^2> on the post-measurement mixture
  double obstruction_commuting = 0.0;     // measure sigma_z, conserve sigma_z
  double obstruction_noncommuting = 0.0;  // measure sigma_x, conserve sigma_z
};

AngularMomentumReport run_angular_momentum();

/// Two-spin singlet as a 4-dimensional state, factors {particle 1, particle 2}.
QuantumState singlet_state();

/// Total spin squared (S1 + S2)^2 for two spin-1/2 particles, units hbar^2.
ComplexMatrix total_spin_squared();

}  // namespace nosig
