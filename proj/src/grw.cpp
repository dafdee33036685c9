#include "nosig/grw.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <span>

#include "nosig/kernels.hpp"
#include "nosig/linalg.hpp"

namespace nosig {

void GrwParams::validate() const {
  if (alpha <= 0.0) throw ContractError("alpha must be positive");
  // rate 0 is the no-hit limit (pure Schroedinger evolution)
  if (lambda_rate < 0.0) throw ContractError("lambda_rate must be >= 0");
  for (double m : mass_factors)
    if (m <= 0.0) throw ContractError("mass factors must be positive");
}

double GrwParams::rate_for(std::size_t particle_1based) const {
  if (mass_factors.empty()) return lambda_rate;
  if (particle_1based < 1 || particle_1based > mass_factors.size())
    throw StructuralError("particle index out of range");
  return lambda_rate * mass_factors[particle_1based - 1];
}

GridWavefunction::GridWavefunction(std::vector<std::vector<double>> grids,
                                   ComplexVector amplitudes)
    : grids_(std::move(grids)), amplitudes_(std::move(amplitudes)) {
  if (grids_.empty()) throw StructuralError("need >= 1 particle");
  std::size_t total = 1;
  for (const auto& g : grids_) {
    if (g.size() < 2) throw StructuralError("each grid needs >= 2 points");
    const double dx = g[1] - g[0];
    if (dx <= 0.0) throw StructuralError("grid positions must increase");
    for (std::size_t k = 1; k < g.size(); ++k)
      if (std::abs((g[k] - g[k - 1]) - dx) > 1e-9 * std::abs(dx))
        throw StructuralError("grids must be uniformly spaced");
    total *= g.size();
    if (total > kGrwMaxPoints)
      throw StructuralError("product grid exceeds the exact-simulation cap");
  }
  if (amplitudes_.size() != total)
    throw StructuralError("amplitude count does not match the product grid");
  const double n = norm();
  if (std::abs(n - 1.0) > kNormRejectTol)
    throw ContractError("wavefunction norm deviates from 1 by " +
                        std::to_string(std::abs(n - 1.0)));
}

const std::vector<double>& GridWavefunction::grid(
    std::size_t particle_1based) const {
  if (particle_1based < 1 || particle_1based > grids_.size())
    throw StructuralError("particle index out of range");
  return grids_[particle_1based - 1];
}

double GridWavefunction::spacing(std::size_t particle_1based) const {
  const auto& g = grid(particle_1based);
  return g[1] - g[0];
}

double GridWavefunction::norm() const {
  return std::sqrt(kernels::norm_sq(amplitudes_.size(), amplitudes_.data()));
}

std::size_t GridWavefunction::stride(std::size_t particle_1based) const {
  if (particle_1based < 1 || particle_1based > grids_.size())
    throw StructuralError("particle index out of range");
  std::size_t s = 1;
  for (std::size_t p = particle_1based; p < grids_.size(); ++p)
    s *= grids_[p].size();
  return s;
}

std::vector<double> GridWavefunction::position_marginal(
    std::size_t particle_1based) const {
  const auto& g = grid(particle_1based);
  const std::size_t np = g.size();
  const std::size_t str = stride(particle_1based);
  const std::size_t block = np * str;
  std::vector<double> m(np, 0.0);
  for (std::size_t base = 0; base < amplitudes_.size(); base += block)
    for (std::size_t j = 0; j < np; ++j)
      m[j] += kernels::norm_sq(str, amplitudes_.data() + base + j * str);
  return m;
}

LocalizationOperator localization_operator(double x_center,
                                           std::size_t particle_1based,
                                           const GrwParams& params,
                                           const GridWavefunction& state) {
  params.validate();
  const auto& g = state.grid(particle_1based);
  LocalizationOperator op;
  op.particle = particle_1based;
  op.center = x_center;
  op.weights.resize(g.size());
  const double prefactor =
      std::pow(params.alpha / std::numbers::pi, 0.25);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double d = g[j] - x_center;
    op.weights[j] = prefactor * std::exp(-0.5 * params.alpha * d * d);
  }
  // 1/sqrt(alpha) should span >= 8 grid points for faithful hit sampling
  op.coarse_grid_warning =
      state.spacing(particle_1based) > 1.0 / (8.0 * std::sqrt(params.alpha));
  return op;
}

LocalizedState apply_localization(const GridWavefunction& state,
                                  const LocalizationOperator& op) {
  const std::size_t np = state.grid(op.particle).size();
  if (op.weights.size() != np)
    throw StructuralError("localization weights do not match the grid");
  const std::size_t str = state.stride(op.particle);
  const std::size_t block = np * str;

  ComplexVector amps = state.amplitudes();
  for (std::size_t base = 0; base < amps.size(); base += block)
    for (std::size_t j = 0; j < np; ++j)
      kernels::scale(str, op.weights[j], amps.data() + base + j * str);

  const double norm = std::sqrt(kernels::norm_sq(amps.size(), amps.data()));
  if (norm < 1e-150)
    throw ContractError("localization annihilated the state numerically");
  kernels::scale(amps.size(), 1.0 / norm, amps.data());

  std::vector<std::vector<double>> grids;
  for (std::size_t p = 1; p <= state.n_particles(); ++p)
    grids.push_back(state.grid(p));
  return {GridWavefunction(std::move(grids), std::move(amps)), norm};
}

std::vector<double> localization_completeness_defect(
    std::size_t particle_1based, const GrwParams& params,
    const GridWavefunction& state) {
  params.validate();
  const auto& g = state.grid(particle_1based);
  const double dx = state.spacing(particle_1based);
  const double pref = std::sqrt(params.alpha / std::numbers::pi);
  std::vector<double> defect(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    double q = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double d = g[j] - g[k];
      q += dx * pref * std::exp(-params.alpha * d * d);
    }
    defect[j] = std::abs(q - 1.0);
  }
  return defect;
}

HitDistribution hit_position_distribution(const GridWavefunction& state,
                                          std::size_t particle_1based,
                                          const GrwParams& params) {
  params.validate();
  const auto& g = state.grid(particle_1based);
  const double dx = state.spacing(particle_1based);
  const std::vector<double> marginal = state.position_marginal(particle_1based);

  // |L(x_k) psi|^2 = sqrt(alpha/pi) sum_j exp(-alpha (x_j - x_k)^2) m(j).
  // Uniform spacing makes the kernel a function of |j - k| alone; offsets
  // beyond the cutoff contribute < 1e-16 and are dropped.
  const std::size_t n = g.size();
  const double pref = std::sqrt(params.alpha / std::numbers::pi);
  std::size_t cutoff = static_cast<std::size_t>(
      std::ceil(6.0 / (std::sqrt(params.alpha) * dx)));
  cutoff = std::min(cutoff, n - 1);
  std::vector<double> kern(cutoff + 1);
  for (std::size_t m = 0; m <= cutoff; ++m) {
    const double d = static_cast<double>(m) * dx;
    kern[m] = std::exp(-params.alpha * d * d);
  }

  HitDistribution dist;
  dist.p.resize(n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double q = 0.0;
    const std::size_t lo = k > cutoff ? k - cutoff : 0;
    const std::size_t hi = std::min(k + cutoff, n - 1);
    for (std::size_t j = lo; j <= hi; ++j)
      q += kern[j > k ? j - k : k - j] * marginal[j];
    dist.p[k] = pref * q * dx;
    total += dist.p[k];
  }
  dist.raw_sum = total;
  dist.coarse_grid_warning = std::abs(total - 1.0) > 1e-8;
  if (total <= 0.0)
    throw ContractError("hit distribution vanished on the grid");
  for (double& v : dist.p) v /= total;
  return dist;
}

HitSample sample_hit(const GridWavefunction& state,
                     std::size_t particle_1based, const GrwParams& params,
                     Rng& rng) {
  const HitDistribution dist =
      hit_position_distribution(state, particle_1based, params);
  const std::size_t k = rng.pick_weighted(dist.p);
  const double center = state.grid(particle_1based)[k];
  const LocalizationOperator op =
      localization_operator(center, particle_1based, params, state);
  LocalizedState post = apply_localization(state, op);
  return {center, std::move(post.state), post.norm_before,
          dist.coarse_grid_warning || op.coarse_grid_warning};
}

namespace {

// Spectral propagator: exact for any interval length.
struct Propagator {
  HermitianEig eig;

  void advance(ComplexVector& amps, double dt) const {
    const std::size_t n = amps.size();
    ComplexVector modal(n);
    kernels::matmul_acc(n, n, 1, eig.vectors.adjoint().data(), amps.data(),
                        modal.data());
    for (std::size_t i = 0; i < n; ++i)
      modal[i] *= std::exp(cdouble(0.0, -eig.values[i] * dt));
    std::fill(amps.begin(), amps.end(), cdouble{});
    kernels::matmul_acc(n, n, 1, eig.vectors.data(), modal.data(),
                        amps.data());
  }
};

}  // namespace

GrwTrajectory evolve(const GridWavefunction& initial, const GrwParams& params,
                     double duration, const ComplexMatrix* hamiltonian,
                     Rng& rng) {
  params.validate();
  if (duration < 0.0) throw StructuralError("duration must be >= 0");
  if (!params.mass_factors.empty() &&
      params.mass_factors.size() != initial.n_particles())
    throw StructuralError("mass_factors must match the particle count");

  std::unique_ptr<Propagator> prop;
  if (hamiltonian != nullptr) {
    if (initial.total_points() > kGrwMaxHamiltonianDim)
      throw StructuralError("product grid too large for unitary propagation");
    if (hamiltonian->rows() != initial.total_points())
      throw StructuralError("Hamiltonian does not match the product grid");
    prop = std::make_unique<Propagator>(Propagator{hermitian_eig(*hamiltonian)});
  }

  const std::size_t n = initial.n_particles();
  std::vector<double> rates(n);
  double total_rate = 0.0;
  for (std::size_t p = 1; p <= n; ++p) {
    rates[p - 1] = params.rate_for(p);
    total_rate += rates[p - 1];
  }

  GrwTrajectory traj{{}, initial};
  double t = 0.0;
  while (true) {
    const double wait = rng.exponential(total_rate);
    const double step = std::min(wait, duration - t);
    if (prop && step > 0.0) {
      ComplexVector amps = traj.final_state.amplitudes();
      prop->advance(amps, step);
      std::vector<std::vector<double>> grids;
      for (std::size_t p = 1; p <= n; ++p)
        grids.push_back(traj.final_state.grid(p));
      traj.final_state = GridWavefunction(std::move(grids), std::move(amps));
    }
    if (t + wait >= duration) break;
    t += wait;
    const std::size_t particle =
        rng.pick_weighted(std::span<const double>(rates)) + 1;
    HitSample hit = sample_hit(traj.final_state, particle, params, rng);
    traj.jumps.push_back({t, particle, hit.x_center, hit.norm_before});
    traj.final_state = std::move(hit.post_state);
  }
  return traj;
}

CollapseRateReport collapse_rate_report(double n_particles,
                                        double lambda_rate) {
  if (n_particles < 1.0 || lambda_rate <= 0.0)
    throw ContractError("need n_particles >= 1 and lambda_rate > 0");
  CollapseRateReport rep;
  rep.n_particles = n_particles;
  rep.lambda_rate = lambda_rate;
  rep.effective_rate = n_particles * lambda_rate;
  rep.mean_interval_seconds = 1.0 / rep.effective_rate;
  rep.mean_interval_years = rep.mean_interval_seconds / kSecondsPerYear;
  return rep;
}

GridWavefunction gaussian_packet(double center, double sigma, double grid_min,
                                 double grid_max, std::size_t points) {
  return two_peak_packet(1.0, 0.0, center, center, sigma, grid_min, grid_max,
                         points);
}

GridWavefunction two_peak_packet(cdouble c_left, cdouble c_right,
                                 double center1, double center2, double sigma,
                                 double grid_min, double grid_max,
                                 std::size_t points) {
  if (sigma <= 0.0) throw StructuralError("sigma must be positive");
  if (points < 2) throw StructuralError("need >= 2 grid points");
  std::vector<double> g(points);
  const double dx = (grid_max - grid_min) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k)
    g[k] = grid_min + dx * static_cast<double>(k);

  ComplexVector amps(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double d1 = (g[k] - center1) / sigma;
    const double d2 = (g[k] - center2) / sigma;
    amps[k] = c_left * std::exp(-0.25 * d1 * d1) +
              c_right * std::exp(-0.25 * d2 * d2);
  }
  const double norm = std::sqrt(kernels::norm_sq(points, amps.data()));
  if (norm <= 0.0) throw ContractError("packet vanished on the grid");
  kernels::scale(points, 1.0 / norm, amps.data());
  return {{std::move(g)}, std::move(amps)};
}

GridWavefunction rigid_superposition(std::size_t n_particles,
                                     double separation) {
  if (n_particles < 1) throw StructuralError("need >= 1 particle");
  if (separation <= 0.0) throw StructuralError("separation must be positive");
  std::vector<std::vector<double>> grids(
      n_particles, std::vector<double>{0.0, separation});
  const std::size_t total = std::size_t{1} << n_particles;
  if (total > kGrwMaxPoints)
    throw StructuralError("too many particles for the exact cap");
  ComplexVector amps(total);
  const double s = 1.0 / std::sqrt(2.0);
  amps[0] = s;          // every particle at 0
  amps[total - 1] = s;  // every particle at `separation`
  return {std::move(grids), std::move(amps)};
}

ComplexMatrix kinetic_hamiltonian(const GridWavefunction& single_particle) {
  if (single_particle.n_particles() != 1)
    throw StructuralError("kinetic helper covers a single particle");
  const std::size_t n = single_particle.total_points();
  const double dx = single_particle.spacing(1);
  const double diag = 1.0 / (dx * dx);
  const double off = -0.5 / (dx * dx);
  ComplexMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    h(j, j) = diag;
    if (j + 1 < n) {
      h(j, j + 1) = off;
      h(j + 1, j) = off;
    }
  }
  return h;
}

}  // namespace nosig
