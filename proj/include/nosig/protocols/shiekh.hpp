#pragma once

#include <array>

#include "nosig/types.hpp"

namespace nosig {

/// A single particle split between a far left branch and a two-arm
/// interferometer on the right; the sender toggles a phase shifter in one
/// arm to steer the right output between the counter port and the port
/// beside it.
struct ShiekhReport {
  double p_counter = 0.0;      // central right counter fires
  double p_left = 0.0;         // particle found at left (after the counter
                               // measurement, nonselective)
  double right_branch_norm = 0.0;          // total probability on the right
  std::array<double, 2> right_distribution{};  // {counter port, displaced port}
};

ShiekhReport run_shiekh(bool phase_inserted);

}  // namespace nosig
