#pragma once

#include <vector>

#include "nosig/types.hpp"

namespace nosig {

/// Two position-correlated particles on 1-D transverse grids, a slit on each
/// side modeled as a nonselective pass/block aperture measurement. The
/// question: does narrowing the right slit change the left particle's
/// position statistics?
struct PopperConfig {
  std::size_t grid_points = 256;
  double correlation_width = 4.0;  // grid units; must exceed the spacing
  double slit_width_l = 32.0;
  double slit_width_r = 32.0;
  bool narrow_r = true;          // compare against a narrowed right slit
  double narrow_factor = 0.25;   // narrowed width = slit_width_r * factor
};

struct PopperReport {
  std::vector<double> left_marginal_wide;    // P(y_L) with the R slit as given
  std::vector<double> left_marginal_narrow;  // P(y_L) with the R slit narrowed
  double sup_norm_deviation = 0.0;
  double left_spread = 0.0;        // standard deviation of the left marginal
  double right_conditional_spread_wide = 0.0;    // post-slit spread at R
  double right_conditional_spread_narrow = 0.0;  // ditto, narrowed slit
};

PopperReport run_popper(const PopperConfig& cfg);

}  // namespace nosig
