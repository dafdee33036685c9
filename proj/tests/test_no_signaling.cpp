#include <cmath>

#include "doctest.h"
#include "nosig/linalg.hpp"
#include "nosig/no_signaling.hpp"
#include "nosig/protocols/angular_momentum.hpp"
#include "nosig/random_ops.hpp"
#include "test_support.hpp"

using namespace nosig;
using testsupport::max_abs_diff;

TEST_SUITE("no_signaling") {

TEST_CASE("unitary, projective and Kraus actions leave Alice's state alone") {
  Rng rng(31);
  for (int rep = 0; rep < 30; ++rep) {
    const DensityOperator rho{random_density(6, rng), DimList{2, 3}};

    CHECK(marginal_invariance(
              rho, LocalOperation::unitary(random_unitary(3, rng), 2)) <=
          kTol);
    CHECK(marginal_invariance(
              rho, LocalOperation::nonselective(
                       MeasurementFamily(random_projector_family(3, 2, rng)),
                       2)) <= kTol);
    CHECK(marginal_invariance(
              rho, LocalOperation::kraus(
                       KrausChannel(random_kraus_operators(3, 3, rng)), 2)) <=
          kTol);
  }
}

TEST_CASE("selective operations are routed away from the invariance claim") {
  ComplexMatrix up(2, 2);
  up(0, 0) = 1.0;
  const DensityOperator rho = singlet_state().to_density();
  CHECK_THROWS_AS(
      marginal_invariance(rho, LocalOperation::selective(up, 2)),
      StructuralError);
}

TEST_CASE("operations must target factor 2 of a bipartite state") {
  Rng rng(32);
  const DensityOperator rho{random_density(4, rng), DimList{2, 2}};
  CHECK_THROWS_AS(
      marginal_invariance(rho,
                          LocalOperation::unitary(random_unitary(2, rng), 1)),
      StructuralError);
}

TEST_CASE("the sweep stays below tolerance across kinds and dimensions") {
  const SweepResult res = no_signaling_sweep(200, 2, 4, 777);
  CHECK(res.cases == 200);
  CHECK(res.max_deviation <= kTol);
}

TEST_CASE("conditioning on Bob's outcome does change Alice's state") {
  ComplexMatrix up(2, 2);
  up(0, 0) = 1.0;
  const auto cond = conditional_marginal(singlet_state().to_density(), up);
  CHECK(cond.probability == doctest::Approx(0.5));

  ComplexVector down{0.0, 1.0};
  CHECK(max_abs_diff(cond.alice_state.matrix(),
                     ComplexMatrix::outer(down, down)) < 1e-12);

  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK(trace_distance(cond.alice_state.matrix(), half) ==
        doctest::Approx(0.5));
}

TEST_CASE("product states show no conditional steering") {
  Rng rng(33);
  const ComplexMatrix r1 = random_density(2, rng);
  const ComplexMatrix r2 = random_density(2, rng);
  const DensityOperator rho{kron(r1, r2), DimList{2, 2}};
  const auto fam = random_projector_family(2, 2, rng);
  for (const auto& p : fam) {
    const auto cond = conditional_marginal(rho, p);
    CHECK(max_abs_diff(cond.alice_state.matrix(), r1) < 1e-10);
  }
}

TEST_CASE("probability-weighted recombination recovers the marginal") {
  Rng rng(34);
  const DensityOperator rho{random_density(4, rng), DimList{2, 2}};
  const auto fam = random_projector_family(2, 2, rng);
  ComplexMatrix mix(2, 2);
  for (const auto& p : fam) {
    const auto cond = conditional_marginal(rho, p);
    mix += cond.alice_state.matrix() * cdouble(cond.probability);
  }
  const DensityOperator marginal = reduced_state(rho, {1});
  CHECK(max_abs_diff(mix, marginal.matrix()) < 1e-10);
  CHECK(trace_distance(mix, marginal.matrix()) < kTol);
}

TEST_CASE("capacity of a sampler that ignores Bob is negligible") {
  ProtocolSampler ignore = [](int, Rng& rng) -> int {
    return rng.bernoulli(0.5) ? 1 : 0;
  };
  const SignalingReport rep = channel_capacity_estimate(ignore, 100000, 404);
  CHECK(rep.mutual_information_bits <= 0.01);
  CHECK(rep.deviation < 0.05);
  CHECK_FALSE(rep.degenerate);
}

TEST_CASE("capacity of the identity channel is a full bit") {
  ProtocolSampler copy = [](int bob, Rng&) -> int { return bob; };
  const SignalingReport rep = channel_capacity_estimate(copy, 10000, 405);
  CHECK(rep.mutual_information_bits >= 0.99);
  CHECK(rep.deviation == doctest::Approx(1.0));
}

TEST_CASE("degenerate samplers are flagged and report zero") {
  ProtocolSampler constant = [](int, Rng&) -> int { return 7; };
  const SignalingReport rep = channel_capacity_estimate(constant, 2000, 406);
  CHECK(rep.degenerate);
  CHECK(rep.mutual_information_bits == 0.0);
}

TEST_CASE("too few trials are rejected") {
  ProtocolSampler copy = [](int bob, Rng&) -> int { return bob; };
  CHECK_THROWS_AS(channel_capacity_estimate(copy, 999, 1), StructuralError);
}

TEST_CASE("mutual information is nonnegative and relabeling invariant") {
  Rng rng(35);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::vector<std::size_t>> table(
        2, std::vector<std::size_t>(4, 0));
    for (auto& row : table)
      for (auto& cell : row) cell = rng.uniform_index(50);

    const double mi = mutual_information_bits(table);
    CHECK(mi >= 0.0);

    // permute Alice's labels
    std::vector<std::vector<std::size_t>> permuted(
        2, std::vector<std::size_t>(4, 0));
    const std::size_t perm[4] = {2, 0, 3, 1};
    for (int b = 0; b < 2; ++b)
      for (std::size_t y = 0; y < 4; ++y) permuted[b][perm[y]] = table[b][y];
    CHECK(mutual_information_bits(permuted) == doctest::Approx(mi));
  }
}

TEST_CASE("reported plug-in bias scale matches the table size") {
  ProtocolSampler ignore = [](int, Rng& rng) -> int {
    return static_cast<int>(rng.uniform_index(4));
  };
  const SignalingReport rep = channel_capacity_estimate(ignore, 10000, 407);
  CHECK(rep.bias_bound_bits ==
        doctest::Approx(3.0 / (2.0 * 10000.0 * std::log(2.0))));
  CHECK(rep.trials == 10000);
}

}  // TEST_SUITE
