#include "nosig/protocols/shiekh.hpp"

#include <cmath>

#include "nosig/measurement.hpp"

namespace nosig {

namespace {

// Symmetric beam splitter: phase shift pi/2 on reflection, none on
// transmission.
const ComplexMatrix kBeamSplitter(2, 2,
                                  {cdouble(0.7071067811865476, 0.0),
                                   cdouble(0.0, 0.7071067811865476),
                                   cdouble(0.0, 0.7071067811865476),
                                   cdouble(0.7071067811865476, 0.0)});

}  // namespace

ShiekhReport run_shiekh(bool phase_inserted) {
  // Modes: 0 = left branch, 1..2 = interferometer arms, which the second
  // splitter maps onto {counter port, displaced port}.
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector amps{s, s, 0.0};

  ComplexMatrix mz = kBeamSplitter;
  if (phase_inserted) {
    const ComplexMatrix shift(2, 2, {1.0, 0.0, 0.0, -1.0});
    mz = shift * mz;
  }
  mz = kBeamSplitter * mz;

  ComplexMatrix full(3, 3);
  full(0, 0) = 1.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) full(r + 1, c + 1) = mz(r, c);

  const QuantumState state{full.apply(amps), DimList{3}};

  // Without the shifter the splitter pair funnels the right branch into the
  // cross port; the counter sits there.
  constexpr std::size_t kCounterMode = 2;
  ComplexMatrix counter(3, 3);
  counter(kCounterMode, kCounterMode) = 1.0;
  ComplexMatrix left(3, 3);
  left(0, 0) = 1.0;

  ShiekhReport rep;
  rep.p_counter = born_probability(state, counter);
  rep.right_distribution = {std::norm(state.amplitudes()[kCounterMode]),
                            std::norm(state.amplitudes()[1])};
  rep.right_branch_norm =
      rep.right_distribution[0] + rep.right_distribution[1];

  // The counter either fires or stays silent; both cases reduce the wave
  // function. The left-branch probability is read after that nonselective
  // measurement.
  const DensityOperator after = measure_nonselective(
      state.to_density(), MeasurementFamily::binary(counter), 1);
  rep.p_left = born_probability(after, left);
  return rep;
}

}  // namespace nosig
