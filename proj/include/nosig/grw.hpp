#pragma once

#include "nosig/matrix.hpp"
#include "nosig/rng.hpp"

namespace nosig {

// Physical parameter choices for the spontaneous localization dynamics,
// kept as named constants; simulations run in rescaled dimensionless units.
inline constexpr double kGrwPhysicalAlphaPerCm2 = 1e10;
inline constexpr double kGrwPhysicalLambdaPerSec = 1e-16;
inline constexpr double kSecondsPerYear = 3.15576e7;

/// Localization accuracy 1/sqrt(alpha) and mean hit frequency lambda per
/// particle. mass_factors optionally scales the per-particle rate (nucleon
/// reference = 1).
struct GrwParams {
  double alpha = 1.0;
  double lambda_rate = 1.0;
  std::vector<double> mass_factors;  // empty = all ones

  void validate() const;
  double rate_for(std::size_t particle_1based) const;
};

/// N distinguishable particles on per-particle 1-D grids; amplitudes over
/// the product grid, row-major with particle 1 most significant. Grids must
/// be uniformly spaced with >= 2 points.
class GridWavefunction {
 public:
  GridWavefunction(std::vector<std::vector<double>> grids,
                   ComplexVector amplitudes);

  std::size_t n_particles() const { return grids_.size(); }
  const std::vector<double>& grid(std::size_t particle_1based) const;
  double spacing(std::size_t particle_1based) const;
  std::size_t total_points() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexVector& mutable_amplitudes() { return amplitudes_; }
  double norm() const;

  /// Index stride of the given particle's coordinate in the flat layout.
  std::size_t stride(std::size_t particle_1based) const;

  /// Position marginal |psi|^2 summed over the other particles.
  std::vector<double> position_marginal(std::size_t particle_1based) const;

 private:
  std::vector<std::vector<double>> grids_;
  ComplexVector amplitudes_;
};

inline constexpr std::size_t kGrwMaxPoints = std::size_t{1} << 20;

/// Diagonal hit operator (alpha/pi)^(1/4) exp(-alpha/2 (x_j - center)^2)
/// over one particle's grid.
struct LocalizationOperator {
  std::size_t particle;  // 1-based
  double center;
  std::vector<double> weights;
  bool coarse_grid_warning = false;  // grid does not resolve 1/sqrt(alpha)
};

LocalizationOperator localization_operator(double x_center,
                                           std::size_t particle_1based,
                                           const GrwParams& params,
                                           const GridWavefunction& state);

struct LocalizedState {
  GridWavefunction state;   // renormalized
  double norm_before;       // |L psi| prior to renormalization
};

LocalizedState apply_localization(const GridWavefunction& state,
                                  const LocalizationOperator& op);

/// Quadrature check of sum_k dx L^2(x_k) = 1 at every grid point of the
/// particle; returns the per-point defect |quadrature - 1|. Points whose
/// Gaussian support is clipped by the grid edge show large defects.
std::vector<double> localization_completeness_defect(
    std::size_t particle_1based, const GrwParams& params,
    const GridWavefunction& state);

/// Grid-discretized hit-center distribution p(x_k) for one particle,
/// normalized to sum exactly to 1. raw_sum reports the quadrature mass
/// before normalization (near 1 on a well-resolved grid).
struct HitDistribution {
  std::vector<double> p;
  double raw_sum = 0.0;
  bool coarse_grid_warning = false;
};

HitDistribution hit_position_distribution(const GridWavefunction& state,
                                          std::size_t particle_1based,
                                          const GrwParams& params);

struct HitSample {
  double x_center;
  GridWavefunction post_state;
  double norm_before;
  bool coarse_grid_warning = false;
};

/// Draw a hit center from p(x) and collapse the state (Born-weighted).
HitSample sample_hit(const GridWavefunction& state, std::size_t particle_1based,
                     const GrwParams& params, Rng& rng);

struct GrwJump {
  double time;
  std::size_t particle;  // 1-based
  double center;
  double norm_before;
};

struct GrwTrajectory {
  std::vector<GrwJump> jumps;  // times strictly increasing
  GridWavefunction final_state;
};

/// Poisson-timed hits at rate lambda per particle interleaved with unitary
/// propagation (spectral, hence exact, when a Hamiltonian is given).
/// Fully reproducible from the Rng state.
GrwTrajectory evolve(const GridWavefunction& initial, const GrwParams& params,
                     double duration, const ComplexMatrix* hamiltonian,
                     Rng& rng);

/// Hamiltonians are diagonalized for propagation; cap on the product-grid
/// dimension when one is present.
inline constexpr std::size_t kGrwMaxHamiltonianDim = 512;

struct CollapseRateReport {
  double n_particles;
  double lambda_rate;              // per particle, s^-1 in physical units
  double effective_rate;           // n * lambda
  double mean_interval_seconds;    // 1 / effective_rate
  double mean_interval_years;
};

/// The center-of-mass amplification arithmetic in physical units.
CollapseRateReport collapse_rate_report(double n_particles,
                                        double lambda_rate);

// --- ready-made initial states -------------------------------------------

GridWavefunction gaussian_packet(double center, double sigma, double grid_min,
                                 double grid_max, std::size_t points);

/// c_left * G(center1) + c_right * G(center2), normalized.
GridWavefunction two_peak_packet(cdouble c_left, cdouble c_right,
                                 double center1, double center2, double sigma,
                                 double grid_min, double grid_max,
                                 std::size_t points);

/// N particles, each on the two-point grid {0, separation}, in an equal
/// superposition of "all at 0" and "all at separation".
GridWavefunction rigid_superposition(std::size_t n_particles,
                                     double separation);

/// Finite-difference -(1/2) d^2/dx^2 for a single-particle state.
ComplexMatrix kinetic_hamiltonian(const GridWavefunction& single_particle);

}  // namespace nosig
