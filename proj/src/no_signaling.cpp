#include "nosig/no_signaling.hpp"

#include <array>
#include <cmath>
#include <map>

#include "nosig/linalg.hpp"
#include "nosig/random_ops.hpp"

namespace nosig {

LocalOperation LocalOperation::unitary(ComplexMatrix u, std::size_t target) {
  if (!u.is_unitary(kTol))
    throw ContractError("local operation payload is not unitary");
  return {Kind::unitary, target, std::move(u)};
}

LocalOperation LocalOperation::nonselective(MeasurementFamily fam,
                                            std::size_t target) {
  return {Kind::nonselective_measurement, target, std::move(fam)};
}

LocalOperation LocalOperation::kraus(KrausChannel ch, std::size_t target) {
  return {Kind::kraus_channel, target, std::move(ch)};
}

LocalOperation LocalOperation::selective(ComplexMatrix projector,
                                         std::size_t target) {
  if (!projector.is_projector(kTol))
    throw ContractError("selective payload is not a projector");
  return {Kind::selective_measurement, target, std::move(projector)};
}

DensityOperator apply_local(const DensityOperator& rho,
                            const LocalOperation& op) {
  switch (op.kind) {
    case LocalOperation::Kind::unitary: {
      const auto& u = std::get<ComplexMatrix>(op.payload);
      const ComplexMatrix ufull = embed(u, rho.dims(), op.target);
      return {ufull * rho.matrix() * ufull.adjoint(), rho.dims()};
    }
    case LocalOperation::Kind::nonselective_measurement:
      return measure_nonselective(rho, std::get<MeasurementFamily>(op.payload),
                                  op.target);
    case LocalOperation::Kind::kraus_channel:
      return apply_kraus(rho, std::get<KrausChannel>(op.payload), op.target);
    case LocalOperation::Kind::selective_measurement:
      throw StructuralError(
          "selective measurements are outcome-dependent; use "
          "conditional_marginal");
  }
  throw StructuralError("unknown local operation kind");
}

double marginal_invariance(const DensityOperator& rho12,
                           const LocalOperation& op) {
  if (rho12.dims().factors() != 2)
    throw StructuralError("marginal_invariance expects a bipartite state");
  if (op.target != 2)
    throw StructuralError("the operation must act on factor 2");
  if (op.kind == LocalOperation::Kind::selective_measurement)
    throw StructuralError(
        "selective measurements are excluded from the invariance claim");
  const DensityOperator before = reduced_state(rho12, {1});
  const DensityOperator after = reduced_state(apply_local(rho12, op), {1});
  return trace_distance(before.matrix(), after.matrix());
}

ConditionalMarginal conditional_marginal(const DensityOperator& rho12,
                                         const ComplexMatrix& projector_on_b) {
  if (rho12.dims().factors() != 2)
    throw StructuralError("conditional_marginal expects a bipartite state");
  SelectiveResult sel = measure_selective(rho12, projector_on_b, 2);
  return {sel.probability, reduced_state(sel.post_state, {1})};
}

double mutual_information_bits(
    const std::vector<std::vector<std::size_t>>& counts) {
  double total = 0.0;
  for (const auto& row : counts)
    for (std::size_t c : row) total += static_cast<double>(c);
  if (total == 0.0) return 0.0;

  const std::size_t nx = counts.size();
  const std::size_t ny = counts.empty() ? 0 : counts[0].size();
  std::vector<double> px(nx, 0.0), py(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      px[x] += static_cast<double>(counts[x][y]) / total;
      py[y] += static_cast<double>(counts[x][y]) / total;
    }
  double mi = 0.0;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      const double pxy = static_cast<double>(counts[x][y]) / total;
      if (pxy > 0.0) mi += pxy * std::log2(pxy / (px[x] * py[y]));
    }
  return std::max(mi, 0.0);
}

SignalingReport channel_capacity_estimate(const ProtocolSampler& sampler,
                                          std::size_t trials,
                                          std::uint64_t seed) {
  if (trials < 1000)
    throw StructuralError("capacity estimation needs >= 1000 trials");
  Rng rng(seed);

  std::map<int, std::size_t> label_index;
  std::vector<std::array<std::size_t, 2>> cells;  // [label][bob]
  for (std::size_t t = 0; t < trials; ++t) {
    const int bob = rng.bernoulli(0.5) ? 1 : 0;
    const int alice = sampler(bob, rng);
    auto [it, inserted] = label_index.try_emplace(alice, cells.size());
    if (inserted) cells.push_back({0, 0});
    ++cells[it->second][bob];
  }

  SignalingReport rep;
  rep.trials = trials;
  if (cells.size() <= 1) {
    rep.degenerate = true;
    return rep;
  }

  std::vector<std::vector<std::size_t>> table(
      2, std::vector<std::size_t>(cells.size(), 0));
  std::array<double, 2> bob_totals = {0.0, 0.0};
  for (std::size_t y = 0; y < cells.size(); ++y)
    for (int b = 0; b < 2; ++b) {
      table[b][y] = cells[y][b];
      bob_totals[b] += static_cast<double>(cells[y][b]);
    }

  rep.mutual_information_bits = mutual_information_bits(table);
  // first-order plug-in bias (Miller-Madow), reported not subtracted
  rep.bias_bound_bits = static_cast<double>((2 - 1) * (cells.size() - 1)) /
                        (2.0 * static_cast<double>(trials) * std::log(2.0));
  double tv = 0.0;
  for (std::size_t y = 0; y < cells.size(); ++y) {
    const double p0 =
        bob_totals[0] > 0 ? cells[y][0] / bob_totals[0] : 0.0;
    const double p1 =
        bob_totals[1] > 0 ? cells[y][1] / bob_totals[1] : 0.0;
    tv += std::abs(p0 - p1);
  }
  rep.deviation = 0.5 * tv;
  return rep;
}

SweepResult no_signaling_sweep(std::size_t cases, std::size_t min_factor_dim,
                               std::size_t max_factor_dim,
                               std::uint64_t seed) {
  if (min_factor_dim < 2 || max_factor_dim < min_factor_dim)
    throw StructuralError("bad factor dimension range");
  SweepResult result;
  Rng rng(seed);
  const std::size_t span = max_factor_dim - min_factor_dim + 1;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t da = min_factor_dim + rng.uniform_index(span);
    const std::size_t db = min_factor_dim + rng.uniform_index(span);
    const DimList dims{da, db};
    DensityOperator rho(random_density(da * db, rng), dims);

    LocalOperation op = [&]() -> LocalOperation {
      switch (c % 3) {
        case 0:
          return LocalOperation::unitary(random_unitary(db, rng), 2);
        case 1: {
          const std::size_t blocks = 2 + rng.uniform_index(db - 1);
          return LocalOperation::nonselective(
              MeasurementFamily(random_projector_family(db, blocks, rng)), 2);
        }
        default: {
          const std::size_t count = 1 + rng.uniform_index(4);
          return LocalOperation::kraus(
              KrausChannel(random_kraus_operators(db, count, rng)), 2);
        }
      }
    }();

    result.max_deviation =
        std::max(result.max_deviation, marginal_invariance(rho, op));
    ++result.cases;
  }
  return result;
}

}  // namespace nosig
