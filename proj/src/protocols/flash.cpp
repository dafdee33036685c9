#include "nosig/protocols/flash.hpp"

#include <array>
#include <cmath>
#include <map>

namespace nosig {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

const ComplexVector kV{1.0, 0.0};
const ComplexVector kH{0.0, 1.0};
// Circular polarizations; chosen so (|V,V> + |H,H>)/sqrt2 equals
// (|R,L> + |L,R>)/sqrt2 identically.
const ComplexVector kR{kInvSqrt2, cdouble(0.0, kInvSqrt2)};
const ComplexVector kL{kInvSqrt2, cdouble(0.0, -kInvSqrt2)};

// Analyzer order matches the experiment's beam order.
const std::array<ComplexVector, 4> kAnalyzers{kV, kH, kL, kR};
enum Beam { kBeamV = 0, kBeamH = 1, kBeamL = 2, kBeamR = 3 };

cdouble overlap(const ComplexVector& a, const ComplexVector& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

ComplexVector orthogonal(const ComplexVector& e) {
  return {-std::conj(e[1]), std::conj(e[0])};
}

struct Branch {
  PolarizationBasis choice;
  std::string outcome;
  ComplexVector alice_photon;  // state of Alice's photon after reduction
};

std::vector<Branch> branches_for(PolarizationBasis choice) {
  if (choice == PolarizationBasis::linear_basis)
    return {{choice, "V", kV}, {choice, "H", kH}};
  // Bob finds R -> Alice's partner photon is L, and vice versa.
  return {{choice, "R", kL}, {choice, "L", kR}};
}

DetectorMeans add_counts(DetectorMeans m, const DetectorCounts& c) {
  m.v += static_cast<double>(c.v);
  m.h += static_cast<double>(c.h);
  m.r += static_cast<double>(c.r);
  m.l += static_cast<double>(c.l);
  return m;
}

std::uint64_t& beam_count(DetectorCounts& c, std::size_t beam) {
  switch (beam) {
    case kBeamV: return c.v;
    case kBeamH: return c.h;
    case kBeamL: return c.l;
    default: return c.r;
  }
}

// One trial with the magic copier: 4n independent photons of a pure
// polarization.
DetectorCounts sample_magic_trial(const ComplexVector& photon, std::size_t n,
                                  Rng& rng) {
  DetectorCounts counts;
  counts.photons = 4 * n;
  for (std::size_t beam = 0; beam < 4; ++beam) {
    const double p = std::norm(overlap(kAnalyzers[beam], photon));
    std::uint64_t clicks = 0;
    for (std::size_t j = 0; j < n; ++j) clicks += rng.bernoulli(p) ? 1 : 0;
    beam_count(counts, beam) = clicks;
  }
  return counts;
}

// One trial with the linear copier. The 4n-photon state is
// cv |V..V> + ch |H..H>; photons are measured one at a time. While photons
// remain, the two branches keep orthogonal suffixes, so the outcome weight
// is |aV|^2 + |aH|^2 termwise; the last photon interferes coherently.
DetectorCounts sample_linear_trial(const ComplexVector& photon, std::size_t n,
                                   Rng& rng) {
  DetectorCounts counts;
  const std::size_t total = 4 * n;
  counts.photons = total;
  cdouble av = photon[kPolV];
  cdouble ah = photon[kPolH];
  for (std::size_t j = 0; j < total; ++j) {
    const std::size_t beam = j / n;
    const ComplexVector& e = kAnalyzers[beam];
    const ComplexVector eperp = orthogonal(e);
    const bool last = (j + 1 == total);

    const cdouble av_click = av * overlap(e, kV);
    const cdouble ah_click = ah * overlap(e, kH);
    const cdouble av_miss = av * overlap(eperp, kV);
    const cdouble ah_miss = ah * overlap(eperp, kH);

    double w_click, w_miss;
    if (last) {
      w_click = std::norm(av_click + ah_click);
      w_miss = std::norm(av_miss + ah_miss);
    } else {
      w_click = std::norm(av_click) + std::norm(ah_click);
      w_miss = std::norm(av_miss) + std::norm(ah_miss);
    }
    const bool click = rng.uniform01() * (w_click + w_miss) < w_click;
    if (click) {
      ++beam_count(counts, beam);
      av = av_click;
      ah = ah_click;
    } else {
      av = av_miss;
      ah = ah_miss;
    }
  }
  return counts;
}

DetectorCounts sample_trial(ClonerKind cloner, const ComplexVector& photon,
                            std::size_t n, Rng& rng) {
  return cloner == ClonerKind::magic ? sample_magic_trial(photon, n, rng)
                                     : sample_linear_trial(photon, n, rng);
}

DetectorMeans expected_means(ClonerKind cloner, const ComplexVector& photon,
                             std::size_t n) {
  DetectorMeans m;
  const double dn = static_cast<double>(n);
  auto per_beam = [&](std::size_t beam) {
    const ComplexVector& e = kAnalyzers[beam];
    if (cloner == ClonerKind::magic) return std::norm(overlap(e, photon));
    // Entangled clone state: single-photon marginals carry no V/H coherence
    // once at least one other photon exists.
    return std::norm(photon[kPolV]) * std::norm(overlap(e, kV)) +
           std::norm(photon[kPolH]) * std::norm(overlap(e, kH));
  };
  m.v = dn * per_beam(kBeamV);
  m.h = dn * per_beam(kBeamH);
  m.l = dn * per_beam(kBeamL);
  m.r = dn * per_beam(kBeamR);
  return m;
}

// Exact joint count distribution for the linear copier, keyed by the
// (v, h, l, r) click tuple.
std::map<std::array<std::uint64_t, 4>, double> exact_count_distribution(
    const ComplexVector& photon, std::size_t n) {
  const std::size_t total = 4 * n;
  std::map<std::array<std::uint64_t, 4>, double> dist;
  for (std::size_t mask = 0; mask < (std::size_t{1} << total); ++mask) {
    cdouble av = photon[kPolV];
    cdouble ah = photon[kPolH];
    std::array<std::uint64_t, 4> tuple{0, 0, 0, 0};
    for (std::size_t j = 0; j < total; ++j) {
      const std::size_t beam = j / n;
      const ComplexVector& e = kAnalyzers[beam];
      const bool click = (mask >> j) & 1;
      const ComplexVector out = click ? e : orthogonal(e);
      av *= overlap(out, kV);
      ah *= overlap(out, kH);
      if (click) {
        // map beam order (V,H,L,R) onto tuple slots (v,h,l,r)
        ++tuple[beam];
      }
    }
    dist[tuple] += std::norm(av + ah);
  }
  return dist;
}

double total_variation(
    const std::map<std::array<std::uint64_t, 4>, double>& p,
    const std::map<std::array<std::uint64_t, 4>, double>& q) {
  double tv = 0.0;
  auto it = p.begin();
  auto jt = q.begin();
  while (it != p.end() || jt != q.end()) {
    if (jt == q.end() || (it != p.end() && it->first < jt->first)) {
      tv += std::abs(it->second);
      ++it;
    } else if (it == p.end() || jt->first < it->first) {
      tv += std::abs(jt->second);
      ++jt;
    } else {
      tv += std::abs(it->second - jt->second);
      ++it;
      ++jt;
    }
  }
  return 0.5 * tv;
}

int decode_choice(const DetectorCounts& c) {
  // The silent detector identifies the basis Bob measured in: a zero among
  // {v, h} points at linear, among {l, r} at circular.
  const std::array<std::uint64_t, 4> counts{c.v, c.h, c.l, c.r};
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (counts[i] < counts[argmin]) argmin = i;
  return argmin <= 1 ? 0 : 1;
}

}  // namespace

FlashReport run_flash(const FlashConfig& cfg) {
  if (cfg.n < 1) throw StructuralError("flash needs n >= 1 photon per beam");
  if (cfg.trials < 1) throw StructuralError("flash needs trials >= 1");
  const std::size_t clones = 4 * cfg.n;
  const bool exact_possible =
      cfg.cloner == ClonerKind::linear && clones <= kFlashExactMaxClones;
  if (cfg.require_exact && !exact_possible)
    throw StructuralError(
        "exact mode needs the linear cloner and 4n <= " +
        std::to_string(kFlashExactMaxClones) + "; use sampled mode");

  FlashReport report;
  report.n = cfg.n;
  report.cloner = cfg.cloner;

  std::vector<PolarizationBasis> choices;
  if (cfg.bob_choice)
    choices = {*cfg.bob_choice};
  else
    choices = {PolarizationBasis::linear_basis,
               PolarizationBasis::circular_basis};

  // Branch tables: split trials evenly over Bob's outcomes within a choice.
  std::uint64_t stream = 0;
  for (PolarizationBasis choice : choices) {
    for (const Branch& br : branches_for(choice)) {
      Rng rng = Rng::derive(cfg.rng_seed, ++stream);
      FlashBranch out;
      out.choice = br.choice;
      out.bob_outcome = br.outcome;
      out.outcome_probability = 0.5;
      out.expected = expected_means(cfg.cloner, br.alice_photon, cfg.n);
      out.trials = cfg.trials;
      DetectorMeans acc;
      for (std::size_t t = 0; t < cfg.trials; ++t)
        acc = add_counts(acc,
                         sample_trial(cfg.cloner, br.alice_photon, cfg.n, rng));
      const double dt = static_cast<double>(cfg.trials);
      out.sampled_mean = {acc.v / dt, acc.h / dt, acc.r / dt, acc.l / dt};
      report.branches.push_back(std::move(out));
    }
  }

  // Signaling estimate with Bob's choice uniformly random. Skipped below the
  // estimator's trial floor (report.signaling.trials stays 0).
  if (cfg.trials >= 1000) {
    const std::size_t n = cfg.n;
    const ClonerKind cloner = cfg.cloner;
    const bool label_by_pattern = cloner == ClonerKind::linear && clones <= 16;
    ProtocolSampler sampler = [n, cloner, label_by_pattern](int bob,
                                                            Rng& rng) -> int {
      const PolarizationBasis choice = bob == 0
                                           ? PolarizationBasis::linear_basis
                                           : PolarizationBasis::circular_basis;
      const auto branches = branches_for(choice);
      const Branch& br = branches[rng.bernoulli(0.5) ? 1 : 0];
      const DetectorCounts c = sample_trial(cloner, br.alice_photon, n, rng);
      if (label_by_pattern) {
        // fine-grained label: the full click tuple
        const std::uint64_t base = n + 1;
        return static_cast<int>(((c.v * base + c.h) * base + c.l) * base +
                                c.r);
      }
      return decode_choice(c);
    };
    report.signaling =
        channel_capacity_estimate(sampler, cfg.trials, cfg.rng_seed ^ 0x5f1a);
  }

  if (exact_possible) {
    std::map<std::array<std::uint64_t, 4>, double> per_choice[2];
    const std::array<PolarizationBasis, 2> both{
        PolarizationBasis::linear_basis, PolarizationBasis::circular_basis};
    for (int ci = 0; ci < 2; ++ci) {
      for (const Branch& br : branches_for(both[ci])) {
        auto dist = exact_count_distribution(br.alice_photon, cfg.n);
        for (const auto& [tuple, p] : dist) per_choice[ci][tuple] += 0.5 * p;
      }
    }
    report.exact_choice_tv = total_variation(per_choice[0], per_choice[1]);
  }
  return report;
}

}  // namespace nosig
