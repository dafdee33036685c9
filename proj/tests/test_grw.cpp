#include <cmath>
#include <numeric>

#include "doctest.h"
#include "nosig/grw.hpp"
#include "test_support.hpp"

using namespace nosig;

namespace {

// chi^2 99% quantile for 15 degrees of freedom
constexpr double kChi2Crit99Df15 = 30.5779;

double phi(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

TEST_SUITE("grw") {

TEST_CASE("parameter and grid validation") {
  const GrwParams bad{-1.0, 1.0};
  CHECK_THROWS_AS(bad.validate(), ContractError);
  CHECK_THROWS_AS((GridWavefunction{{{0.0, 1.0, 3.0}}, ComplexVector(3)}),
                  StructuralError);  // non-uniform grid
  CHECK_THROWS_AS((GridWavefunction{{{0.0, 1.0}}, ComplexVector{1.0, 1.0}}),
                  ContractError);  // unnormalized
}

TEST_CASE("physical defaults and the rate report") {
  CHECK(kGrwPhysicalAlphaPerCm2 == 1e10);
  CHECK(kGrwPhysicalLambdaPerSec == 1e-16);

  const CollapseRateReport avogadro = collapse_rate_report(1e24, 1e-16);
  CHECK(avogadro.effective_rate == 1e8);  // exact in double arithmetic
  CHECK(avogadro.mean_interval_seconds == doctest::Approx(1e-8));

  const CollapseRateReport micro = collapse_rate_report(1.0, 1e-16);
  // one hit per ~3.17e8 years at the physical rate
  CHECK(micro.mean_interval_years ==
        doctest::Approx(3.1688e8).epsilon(1e-3));

  const CollapseRateReport pair = collapse_rate_report(2.0, 0.5);
  CHECK(pair.effective_rate == doctest::Approx(1.0));
}

TEST_CASE("localization at a delta peak only renormalizes") {
  // all amplitude on one grid point
  std::vector<double> grid(64);
  for (std::size_t k = 0; k < 64; ++k) grid[k] = static_cast<double>(k);
  ComplexVector amps(64);
  amps[20] = 1.0;
  const GridWavefunction st{{grid}, amps};
  const GrwParams params{0.25, 1.0};

  const LocalizationOperator op =
      localization_operator(grid[20], 1, params, st);
  const LocalizedState post = apply_localization(st, op);
  CHECK(testsupport::max_abs_diff(post.state.amplitudes(), amps) < 1e-12);
  CHECK(post.norm_before == doctest::Approx(op.weights[20]));
}

TEST_CASE("grid quadrature resolves the completeness integral") {
  const GridWavefunction st = gaussian_packet(0.0, 16.0, -128.0, 127.0, 256);
  // 1/sqrt(alpha) = 8 grid units
  const GrwParams params{1.0 / 64.0, 1.0};
  const auto defect = localization_completeness_defect(1, params, st);
  // interior points: quadrature within 1e-6; edges lose Gaussian mass
  for (std::size_t j = 60; j < 196; ++j) CHECK(defect[j] < 1e-6);
  CHECK(defect[0] > 0.4);
}

TEST_CASE("a far-away hit is effectively never sampled") {
  const GridWavefunction st = gaussian_packet(-60.0, 6.0, -128.0, 127.0, 256);
  const GrwParams params{1.0 / 16.0, 1.0};  // 1/sqrt(alpha) = 4

  const HitDistribution dist = hit_position_distribution(st, 1, params);
  CHECK(std::abs(dist.raw_sum - 1.0) < 1e-8);
  // mass at the opposite side of the grid (>= 20 widths away)
  double tail = 0.0;
  for (std::size_t k = 200; k < 256; ++k) tail += dist.p[k];
  CHECK(tail < 1e-12);

  // applying such a hit by hand nearly annihilates the state
  const LocalizationOperator far =
      localization_operator(100.0, 1, params, st);
  const LocalizedState post = apply_localization(st, far);
  CHECK(post.norm_before < 1e-30);
}

TEST_CASE("hit centers follow the smeared position distribution") {
  // Gaussian much wider than the localization accuracy: the center histogram
  // tracks |psi|^2 convolved with the alpha-Gaussian. For Gaussians the
  // convolution is again Gaussian with variance sigma^2 + 1/(2 alpha).
  const double sigma = 16.0;
  const double alpha = 1.0 / 16.0;  // accuracy 4 grid units
  const GridWavefunction st =
      gaussian_packet(0.0, sigma, -128.0, 127.0, 256);
  const GrwParams params{alpha, 1.0};

  Rng rng(1234);
  const std::size_t draws = 10000;
  std::vector<double> centers;
  centers.reserve(draws);
  for (std::size_t t = 0; t < draws; ++t)
    centers.push_back(sample_hit(st, 1, params, rng).x_center);

  const double var = sigma * sigma + 0.5 / alpha;
  const double sd = std::sqrt(var);

  // Hit centers live on the grid, so the oracle evaluates the analytic
  // Gaussian on the same lattice before binning.
  const auto& grid = st.grid(1);
  std::vector<double> lattice_mass(grid.size());
  double z = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    lattice_mass[k] = std::exp(-0.5 * grid[k] * grid[k] / var);
    z += lattice_mass[k];
  }
  for (double& m : lattice_mass) m /= z;

  // 16 bins: open tails plus 14 interior bins over +-2.8 sd
  const int bins = 16;
  std::vector<double> edges;
  for (int b = 1; b < bins; ++b)
    edges.push_back(sd * (-2.8 + 5.6 * (b - 1) / (bins - 2.0)));
  auto bin_of = [&](double x) {
    int b = 0;
    while (b < bins - 1 && x > edges[b]) ++b;
    return b;
  };
  std::vector<std::size_t> observed(bins, 0);
  for (double c : centers) ++observed[bin_of(c)];
  std::vector<double> expected(bins, 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k)
    expected[bin_of(grid[k])] += draws * lattice_mass[k];

  double chi2 = 0.0;
  for (int b = 0; b < bins; ++b) {
    REQUIRE(expected[b] > 5.0);
    chi2 +=
        (observed[b] - expected[b]) * (observed[b] - expected[b]) / expected[b];
  }
  CHECK(chi2 < kChi2Crit99Df15);
}

TEST_CASE("hits select branches with Born weights") {
  const double sep = 120.0;
  const GrwParams params{1.0, 1.0};  // accuracy 1 unit, peaks 120 apart

  SUBCASE("asymmetric 1:3 superposition") {
    const GridWavefunction st = two_peak_packet(
        0.5, std::sqrt(0.75), -60.0, 60.0, 2.0, -128.0, 127.0, 256);
    Rng rng(777);
    std::size_t left = 0;
    const std::size_t draws = 10000;
    for (std::size_t t = 0; t < draws; ++t)
      if (sample_hit(st, 1, params, rng).x_center < 0.0) ++left;
    const double freq = static_cast<double>(left) / draws;
    const double sigma3 = 3.0 * std::sqrt(0.25 * 0.75 / draws);
    CHECK(std::abs(freq - 0.25) <= sigma3);
  }

  SUBCASE("symmetric superposition") {
    const GridWavefunction st = two_peak_packet(
        std::sqrt(0.5), std::sqrt(0.5), -60.0, 60.0, 2.0, -128.0, 127.0, 256);
    Rng rng(778);
    std::size_t left = 0;
    const std::size_t draws = 10000;
    for (std::size_t t = 0; t < draws; ++t)
      if (sample_hit(st, 1, params, rng).x_center < 0.0) ++left;
    const double freq = static_cast<double>(left) / draws;
    CHECK(std::abs(freq - 0.5) <= 3.0 * std::sqrt(0.25 / draws));
  }

  SUBCASE("a single hit crushes the minor branch") {
    const GridWavefunction st = two_peak_packet(
        0.5, std::sqrt(0.75), -60.0, 60.0, 2.0, -128.0, 127.0, 256);
    Rng rng(779);
    const HitSample hit = sample_hit(st, 1, params, rng);
    const auto marginal = hit.post_state.position_marginal(1);
    double minor = 0.0, major = 0.0;
    for (std::size_t k = 0; k < marginal.size(); ++k) {
      const bool left_side = hit.post_state.grid(1)[k] < 0.0;
      const bool hit_left = hit.x_center < 0.0;
      (left_side == hit_left ? major : minor) += marginal[k];
    }
    CHECK(minor < 1e-4 * (minor + major));
  }
}

TEST_CASE("post-hit states are normalized across many samples") {
  const GridWavefunction st = two_peak_packet(
      std::sqrt(0.5), std::sqrt(0.5), -40.0, 40.0, 4.0, -128.0, 127.0, 256);
  const GrwParams params{0.25, 1.0};
  Rng rng(780);
  for (int t = 0; t < 200; ++t) {
    const HitSample hit = sample_hit(st, 1, params, rng);
    CHECK(std::abs(hit.post_state.norm() - 1.0) < kTol);
  }
}

TEST_CASE("rate zero reduces to pure Schroedinger evolution") {
  const GridWavefunction st = gaussian_packet(0.0, 3.0, -16.0, 15.5, 64);
  GrwParams params{1.0, 0.0};  // no hits
  const ComplexMatrix h = kinetic_hamiltonian(st);
  Rng rng(781);
  const GrwTrajectory traj = evolve(st, params, 2.5, &h, rng);
  CHECK(traj.jumps.empty());
  CHECK(std::abs(traj.final_state.norm() - 1.0) < kTol);

  // oracle: spectral propagation via the test-side Jacobi eigensolver
  auto eig = testsupport::jacobi_hermitian_eig(h);
  ComplexVector modal(64), want(64);
  for (std::size_t m = 0; m < 64; ++m) {
    cdouble acc = 0.0;
    for (std::size_t k = 0; k < 64; ++k)
      acc += std::conj(eig.vectors(k, m)) * st.amplitudes()[k];
    modal[m] = acc * std::exp(cdouble(0.0, -eig.values[m] * 2.5));
  }
  for (std::size_t k = 0; k < 64; ++k) {
    cdouble acc = 0.0;
    for (std::size_t m = 0; m < 64; ++m) acc += eig.vectors(k, m) * modal[m];
    want[k] = acc;
  }
  CHECK(testsupport::max_abs_diff(traj.final_state.amplitudes(), want) <
        1e-8);
}

TEST_CASE("hit counts follow the Poisson law") {
  const GrwParams params{1.0, 2.0};
  const GridWavefunction st = gaussian_packet(0.0, 8.0, -64.0, 63.0, 128);
  const double duration = 5.0;
  Rng rng(782);
  double total = 0.0;
  const int trajectories = 1000;
  for (int t = 0; t < trajectories; ++t)
    total += static_cast<double>(
        evolve(st, params, duration, nullptr, rng).jumps.size());
  const double mean = total / trajectories;
  const double expectation = params.lambda_rate * duration;  // 10
  const double sigma3 = 3.0 * std::sqrt(expectation / trajectories);
  CHECK(std::abs(mean - expectation) <= sigma3);
}

TEST_CASE("trajectories are reproducible from the seed") {
  const GridWavefunction st = two_peak_packet(
      std::sqrt(0.5), std::sqrt(0.5), -40.0, 40.0, 4.0, -128.0, 127.0, 256);
  const GrwParams params{0.25, 3.0};
  Rng rng1(783), rng2(783);
  const GrwTrajectory a = evolve(st, params, 4.0, nullptr, rng1);
  const GrwTrajectory b = evolve(st, params, 4.0, nullptr, rng2);
  REQUIRE(a.jumps.size() == b.jumps.size());
  for (std::size_t j = 0; j < a.jumps.size(); ++j) {
    CHECK(a.jumps[j].time == b.jumps[j].time);
    CHECK(a.jumps[j].particle == b.jumps[j].particle);
    CHECK(a.jumps[j].center == b.jumps[j].center);
  }
  CHECK(testsupport::max_abs_diff(a.final_state.amplitudes(),
                                  b.final_state.amplitudes()) == 0.0);
  for (std::size_t j = 1; j < a.jumps.size(); ++j)
    CHECK(a.jumps[j].time > a.jumps[j - 1].time);
}

TEST_CASE("rigid superpositions collapse at the amplified rate") {
  const GrwParams params{1.0, 1.0};
  Rng rng(784);
  for (std::size_t n : {1u, 2u, 4u}) {
    const GridWavefunction st = rigid_superposition(n, 50.0);
    const double total_rate = static_cast<double>(n);
    double sum = 0.0;
    const int trajectories = 600;
    for (int t = 0; t < trajectories; ++t) {
      const GrwTrajectory traj =
          evolve(st, params, 40.0 / total_rate, nullptr, rng);
      REQUIRE_FALSE(traj.jumps.empty());
      sum += traj.jumps.front().time;
    }
    const double fitted_rate = trajectories / sum;
    CHECK(std::abs(fitted_rate / total_rate - 1.0) < 0.15);
  }
}

TEST_CASE("mass factors rescale per-particle rates") {
  GrwParams params{1.0, 1.0, {1.0, 3.0}};
  CHECK(params.rate_for(1) == doctest::Approx(1.0));
  CHECK(params.rate_for(2) == doctest::Approx(3.0));

  const GridWavefunction st = rigid_superposition(2, 50.0);
  Rng rng(785);
  std::size_t hits_on_heavy = 0, hits_total = 0;
  for (int t = 0; t < 400; ++t) {
    const GrwTrajectory traj = evolve(st, params, 2.0, nullptr, rng);
    for (const auto& j : traj.jumps) {
      ++hits_total;
      if (j.particle == 2) ++hits_on_heavy;
    }
  }
  const double frac =
      static_cast<double>(hits_on_heavy) / static_cast<double>(hits_total);
  CHECK(std::abs(frac - 0.75) < 0.05);
}

TEST_CASE("coarse grids raise the resolution warning") {
  const GridWavefunction st = rigid_superposition(2, 50.0);
  const GrwParams params{1.0, 1.0};  // accuracy 1 unit vs spacing 50
  const LocalizationOperator op = localization_operator(0.0, 1, params, st);
  CHECK(op.coarse_grid_warning);
}

}  // TEST_SUITE
