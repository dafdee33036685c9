#include "nosig/protocols/greenberger.hpp"

#include <cmath>

#include "nosig/kernels.hpp"
#include "nosig/linalg.hpp"

namespace nosig {

namespace {

// Basis layout: photon 1 {h=0, g=1}, photon 2 {c'=0, d'=1}, shifter {u=0, v=1}.
constexpr std::size_t idx(std::size_t p1, std::size_t p2, std::size_t s) {
  return (p1 * 2 + p2) * 2 + s;
}

cdouble cis(double t) { return {std::cos(t), std::sin(t)}; }

// The forbidden map on the shifter: u -> u, v -> e^{i gamma} u. Applied to
// the joint state and followed by renormalization (the map is not unitary,
// so the image is not normalized).
ComplexVector apply_forbidden_shifter_map(const ComplexVector& amps,
                                          double gamma) {
  ComplexVector out(amps.size());
  const cdouble phase = cis(gamma);
  for (std::size_t p1 = 0; p1 < 2; ++p1)
    for (std::size_t p2 = 0; p2 < 2; ++p2) {
      out[idx(p1, p2, 0)] =
          amps[idx(p1, p2, 0)] + phase * amps[idx(p1, p2, 1)];
      out[idx(p1, p2, 1)] = 0.0;
    }
  return out;
}

}  // namespace

QuantumState greenberger_pre_measurement_state(double alpha, double beta) {
  ComplexVector amps(8);
  const cdouble ea = cis(alpha), eb = cis(beta);
  const cdouble ean = cis(-alpha), ebn = cis(-beta);
  // u branch: (-e^{ia} |h,d'> + e^{-ia} |g,c'>) e^{ib}
  amps[idx(0, 1, 0)] = -0.5 * ea * eb;
  amps[idx(1, 0, 0)] = 0.5 * ean * eb;
  // v branch: (e^{ia} |g,c'> - e^{-ia} |h,d'>) e^{-ib}
  amps[idx(1, 0, 1)] = 0.5 * ea * ebn;
  amps[idx(0, 1, 1)] = -0.5 * ean * ebn;
  return {std::move(amps), DimList{2, 2, 2}};
}

GreenbergerReport run_greenberger(const GreenbergerConfig& cfg) {
  auto final_state = [&](double alpha, double beta,
                         double gamma) -> QuantumState {
    const QuantumState pre = greenberger_pre_measurement_state(alpha, beta);
    if (cfg.legal_evolution) return pre;
    ComplexVector amps =
        apply_forbidden_shifter_map(pre.amplitudes(), gamma);
    const double norm =
        std::sqrt(kernels::norm_sq(amps.size(), amps.data()));
    if (norm < 1e-12)
      throw ContractError("forbidden map annihilated the state");
    kernels::scale(amps.size(), 1.0 / norm, amps.data());
    return {std::move(amps), DimList{2, 2, 2}};
  };

  const QuantumState state =
      final_state(cfg.phase_alpha, cfg.phase_beta, cfg.phase_gamma);

  GreenbergerReport rep;
  const auto& a = state.amplitudes();
  rep.p_h_dprime = std::norm(a[idx(0, 1, 0)]) + std::norm(a[idx(0, 1, 1)]);
  rep.p_g_cprime = std::norm(a[idx(1, 0, 0)]) + std::norm(a[idx(1, 0, 1)]);

  const DensityOperator rho = state.to_density();
  rep.alice_marginal = partial_trace(rho.matrix(), rho.dims(), {1});
  ComplexMatrix mixed = ComplexMatrix::identity(2);
  mixed *= 0.5;
  rep.marginal_deviation = trace_distance(rep.alice_marginal, mixed);

  // Signaling estimate: the shifter agent picks one of two fixed phase
  // programs. With the forbidden map, program 0 makes (g,c') certain and
  // program 1 makes (h,d') certain; legal evolution gives a fair split for
  // both. Alice reports which detector pair fired.
  if (cfg.trials >= 1000) {
    constexpr double kQuarterPi = 0.7853981633974483;
    ProtocolSampler sampler = [&final_state](int bob, Rng& rng) -> int {
      const QuantumState s =
          bob == 0 ? final_state(kQuarterPi, kQuarterPi, 0.0)
                   : final_state(kQuarterPi, -kQuarterPi, 0.0);
      const auto& amps = s.amplitudes();
      const double p_hd =
          std::norm(amps[idx(0, 1, 0)]) + std::norm(amps[idx(0, 1, 1)]);
      const double p_gc =
          std::norm(amps[idx(1, 0, 0)]) + std::norm(amps[idx(1, 0, 1)]);
      return rng.uniform01() * (p_hd + p_gc) < p_hd ? 0 : 1;
    };
    rep.signaling =
        channel_capacity_estimate(sampler, cfg.trials, cfg.rng_seed ^ 0x9e37);
  }
  return rep;
}

double run_epr_rotation(double gamma, bool apply_forbidden_map) {
  // Singlet of two spins, basis {up=0, down=1} per factor.
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector amps(4);
  amps[0 * 2 + 1] = s;   // |up, down>
  amps[1 * 2 + 0] = -s;  // -|down, up>

  if (apply_forbidden_map) {
    // T|down> = |down>, T|up> = e^{i gamma} |down> on particle 2.
    ComplexVector out(4);
    const cdouble phase = cis(gamma);
    for (std::size_t p1 = 0; p1 < 2; ++p1) {
      out[p1 * 2 + 1] = amps[p1 * 2 + 1] + phase * amps[p1 * 2 + 0];
      out[p1 * 2 + 0] = 0.0;
    }
    const double norm = std::sqrt(kernels::norm_sq(4, out.data()));
    kernels::scale(4, 1.0 / norm, out.data());
    amps = std::move(out);
  }

  const QuantumState state{std::move(amps), DimList{2, 2}};

  // Projector onto the -1 eigenvector of sigma.d, d = (cos g, sin g, 0):
  // (|up> - e^{i gamma}|down>)/sqrt2.
  ComplexVector minus{s, -cis(gamma) * s};
  const ComplexMatrix proj =
      embed(ComplexMatrix::outer(minus, minus), state.dims(), 1);
  return born_probability(state, proj);
}

}  // namespace nosig
