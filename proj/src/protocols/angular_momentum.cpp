#include "nosig/protocols/angular_momentum.hpp"

#include <cmath>

namespace nosig {

QuantumState singlet_state() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector amps(4);
  amps[0 * 2 + 1] = s;   // |up, down>
  amps[1 * 2 + 0] = -s;  // -|down, up>
  return {std::move(amps), DimList{2, 2}};
}

ComplexMatrix total_spin_squared() {
  const SpinOperators half = spin_operators(2);
  const DimList dims{2, 2};
  ComplexMatrix s2(4, 4);
  for (const ComplexMatrix* comp : {&half.x, &half.y, &half.z}) {
    const ComplexMatrix total = embed(*comp, dims, 1) + embed(*comp, dims, 2);
    s2 += total * total;
  }
  return s2;
}

AngularMomentumReport run_angular_momentum() {
  AngularMomentumReport rep;
  const QuantumState singlet = singlet_state();
  const ComplexMatrix s2 = total_spin_squared();

  rep.s2_singlet = expectation(s2, singlet);

  const DensityOperator after = measure_nonselective(
      singlet.to_density(), MeasurementFamily::computational_basis(2), 2);
  rep.s2_after_measurement = expectation(s2, after);

  const SpinOperators half = spin_operators(2);
  const ComplexMatrix sigma_z = half.z * cdouble(2.0);
  const ComplexMatrix sigma_x = half.x * cdouble(2.0);

  WaySetup commuting{sigma_z, sigma_z, ComplexMatrix::identity(2), 1.0};
  WaySetup clashing{sigma_x, sigma_z, ComplexMatrix::identity(2), 1.0};
  rep.obstruction_commuting = way_obstruction(commuting);
  rep.obstruction_noncommuting = way_obstruction(clashing);
  return rep;
}

}  // namespace nosig
