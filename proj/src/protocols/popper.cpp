#include "nosig/protocols/popper.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace nosig {

namespace {

// Scale of the center-of-mass envelope. The two-particle amplitude is
// exp(-(y1-y2)^2 / 4w^2) * exp(-(y1+y2)^2 w^2 / 4c^4): sharpening the
// position correlation (w -> 0) broadens each particle's marginal, and at
// w == c the state factorizes into independent Gaussians.
constexpr double kComScale = 8.0;

struct JointState {
  std::size_t n;
  std::vector<double> y;        // grid coordinates
  std::vector<double> amp;      // real amplitudes, row-major (k1, k2)
};

JointState build_state(const PopperConfig& cfg) {
  JointState st;
  st.n = cfg.grid_points;
  st.y.resize(st.n);
  for (std::size_t k = 0; k < st.n; ++k)
    st.y[k] = static_cast<double>(k) - 0.5 * static_cast<double>(st.n - 1);

  st.amp.resize(st.n * st.n);
  const double w2 = cfg.correlation_width * cfg.correlation_width;
  const double c4 = kComScale * kComScale * kComScale * kComScale;
  double norm_sq = 0.0;
  for (std::size_t k1 = 0; k1 < st.n; ++k1)
    for (std::size_t k2 = 0; k2 < st.n; ++k2) {
      const double rel = st.y[k1] - st.y[k2];
      const double com = st.y[k1] + st.y[k2];
      const double a =
          std::exp(-rel * rel / (4.0 * w2) - com * com * w2 / (4.0 * c4));
      st.amp[k1 * st.n + k2] = a;
      norm_sq += a * a;
    }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& a : st.amp) a *= inv;
  return st;
}

std::vector<bool> aperture(const std::vector<double>& y, double width) {
  std::vector<bool> pass(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) pass[k] = std::abs(y[k]) <= 0.5 * width;
  return pass;
}

// Left position marginal after nonselective pass/block measurements of both
// slits. The apertures partition the amplitude exactly, so the sum over the
// four branches reproduces the untouched marginal term by term.
std::vector<double> left_marginal(const JointState& st,
                                  const std::vector<bool>& pass_l,
                                  const std::vector<bool>& pass_r) {
  std::vector<double> m(st.n, 0.0);
  for (std::size_t k1 = 0; k1 < st.n; ++k1) {
    double acc = 0.0;
    for (std::size_t k2 = 0; k2 < st.n; ++k2) {
      const double a = st.amp[k1 * st.n + k2];
      const double in_l = pass_l[k1] ? a : 0.0;
      const double out_l = pass_l[k1] ? 0.0 : a;
      const double in_r = pass_r[k2] ? 1.0 : 0.0;
      const double out_r = 1.0 - in_r;
      acc += (in_l * in_l + out_l * out_l) * (in_r * in_r + out_r * out_r);
    }
    m[k1] = acc;
  }
  return m;
}

// Momentum spread of the right particle conditioned on slit passage. The
// passed branch decomposes over the left index into pure rows, so
// p(m) = sum_k1 |<m | row_k1>|^2 up to normalization.
double right_momentum_spread(const JointState& st,
                             const std::vector<bool>& pass_r) {
  const std::size_t n = st.n;
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<double> momenta(n);
  for (std::size_t j = 0; j < n; ++j)
    momenta[j] = two_pi *
                 (static_cast<double>(j) - 0.5 * static_cast<double>(n)) /
                 static_cast<double>(n);

  std::vector<double> cos_t(n * n), sin_t(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = momenta[j] * st.y[k];
      cos_t[j * n + k] = std::cos(phase);
      sin_t[j * n + k] = std::sin(phase);
    }

  double weight = 0.0;
  std::vector<double> p_raw(n, 0.0);
  for (std::size_t k1 = 0; k1 < n; ++k1) {
    const double* row = &st.amp[k1 * n];
    for (std::size_t k2 = 0; k2 < n; ++k2)
      if (pass_r[k2]) weight += row[k2] * row[k2];
    for (std::size_t j = 0; j < n; ++j) {
      double re = 0.0, im = 0.0;
      const double* cj = &cos_t[j * n];
      const double* sj = &sin_t[j * n];
      for (std::size_t k2 = 0; k2 < n; ++k2) {
        if (!pass_r[k2]) continue;
        re += row[k2] * cj[k2];
        im += row[k2] * sj[k2];
      }
      p_raw[j] += re * re + im * im;
    }
  }
  if (weight <= 0.0) return 0.0;

  double mean = 0.0, mean2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double prob = p_raw[j] / static_cast<double>(n) / weight;
    mean += prob * momenta[j];
    mean2 += prob * momenta[j] * momenta[j];
  }
  return std::sqrt(std::max(mean2 - mean * mean, 0.0));
}

double spread(const std::vector<double>& prob, const std::vector<double>& y) {
  double mean = 0.0, mean2 = 0.0;
  for (std::size_t k = 0; k < prob.size(); ++k) {
    mean += prob[k] * y[k];
    mean2 += prob[k] * y[k] * y[k];
  }
  return std::sqrt(std::max(mean2 - mean * mean, 0.0));
}

}  // namespace

PopperReport run_popper(const PopperConfig& cfg) {
  if (cfg.grid_points < 64)
    throw StructuralError("popper needs grid_points >= 64");
  if (cfg.correlation_width <= 1.0)
    throw UnsupportedError(
        "correlation width at or below the grid spacing approximates a "
        "non-normalizable perfectly correlated state");
  const double extent = static_cast<double>(cfg.grid_points);
  if (cfg.slit_width_l > extent || cfg.slit_width_r > extent)
    throw StructuralError("slit width exceeds the grid extent");
  if (cfg.narrow_factor <= 0.0 || cfg.narrow_factor > 1.0)
    throw StructuralError("narrow_factor must lie in (0, 1]");

  const JointState st = build_state(cfg);
  const std::vector<bool> pass_l = aperture(st.y, cfg.slit_width_l);
  const std::vector<bool> pass_r = aperture(st.y, cfg.slit_width_r);
  const double narrowed =
      cfg.narrow_r ? cfg.slit_width_r * cfg.narrow_factor : cfg.slit_width_r;
  const std::vector<bool> pass_r_narrow = aperture(st.y, narrowed);

  PopperReport rep;
  rep.left_marginal_wide = left_marginal(st, pass_l, pass_r);
  rep.left_marginal_narrow = left_marginal(st, pass_l, pass_r_narrow);
  for (std::size_t k = 0; k < st.n; ++k)
    rep.sup_norm_deviation =
        std::max(rep.sup_norm_deviation,
                 std::abs(rep.left_marginal_wide[k] -
                          rep.left_marginal_narrow[k]));
  rep.left_spread = spread(rep.left_marginal_wide, st.y);
  rep.right_conditional_spread_wide = right_momentum_spread(st, pass_r);
  rep.right_conditional_spread_narrow = right_momentum_spread(st, pass_r_narrow);
  return rep;
}

}  // namespace nosig
