#pragma once

#include <string>

#include "nosig/rng.hpp"
#include "nosig/state.hpp"

namespace nosig {

/// Complete family of mutually orthogonal projectors (a resolution of the
/// identity). Validated at construction within kTol.
class MeasurementFamily {
 public:
  MeasurementFamily(std::vector<ComplexMatrix> projectors,
                    std::vector<std::string> labels = {});

  /// Rank-1 projectors onto the computational basis of dimension d.
  static MeasurementFamily computational_basis(std::size_t d);
  /// Two-outcome family {P, I - P}.
  static MeasurementFamily binary(const ComplexMatrix& p,
                                  std::string label_in = "in",
                                  std::string label_out = "out");

  std::size_t outcomes() const { return projectors_.size(); }
  const ComplexMatrix& projector(std::size_t i) const { return projectors_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t dim() const { return projectors_[0].rows(); }

 private:
  std::vector<ComplexMatrix> projectors_;
  std::vector<std::string> labels_;
};

/// Operator family A_i normalized as sum_i A_i A_i^+ = I and applied as
/// rho -> sum_i A_i^+ rho A_i. That ordering is unusual; use
/// from_left_convention to wrap channels given in the common
/// sum_i C_i^+ C_i = I form.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators);

  /// Adapter for operator families with sum_i C_i^+ C_i = I applied as
  /// rho -> sum_i C_i rho C_i^+; stores A_i = C_i^+, which yields the same
  /// completely positive map under this class's convention.
  static KrausChannel from_left_convention(std::vector<ComplexMatrix> ops);

  std::size_t count() const { return operators_.size(); }
  const ComplexMatrix& op(std::size_t i) const { return operators_[i]; }
  std::size_t dim() const { return operators_[0].rows(); }

 private:
  std::vector<ComplexMatrix> operators_;
};

/// rho -> sum_k P_k rho P_k on the target factor (1-based). Idempotent.
DensityOperator measure_nonselective(const DensityOperator& rho,
                                     const MeasurementFamily& fam,
                                     std::size_t target);

struct SelectiveResult {
  double probability;
  DensityOperator post_state;
};

/// Conditions on one outcome: probability Tr[P rho] and the renormalized
/// post state. Throws ImpossibleOutcomeError below probability 1e-12.
SelectiveResult measure_selective(const DensityOperator& rho,
                                  const ComplexMatrix& projector,
                                  std::size_t target);

/// rho -> sum_i A_i^+ rho A_i on the target factor. Trace preserving.
DensityOperator apply_kraus(const DensityOperator& rho, const KrausChannel& ch,
                            std::size_t target);

// ---------------------------------------------------------------------------
// Ideal measurement interaction and its conservation-law obstruction
// ---------------------------------------------------------------------------

/// Pointer wiring for the ideal premeasurement unitary: system basis state i
/// moves the apparatus from the ready state to pointer_indices[i].
struct VonNeumannSetup {
  std::size_t system_dim;
  std::size_t apparatus_dim;  // must be >= system_dim + 1
  std::size_t ready_index;
  std::vector<std::size_t> pointer_indices;

  void validate() const;
};

/// Permutation unitary on system (x) apparatus realizing
/// |i>|ready> -> |i>|pointer_i>, completed lexicographically elsewhere.
ComplexMatrix vn_ideal_unitary(const VonNeumannSetup& setup);

struct WaySetup {
  ComplexMatrix system_observable;  // Sigma, what we want to measure
  ComplexMatrix system_charge;      // system part of the conserved quantity
  ComplexMatrix apparatus_charge;   // apparatus part of the conserved quantity
  double apparatus_l2_mean = 0.0;   // <ready| L^2 |ready>, units hbar^2
};

/// max_{i != j} |<phi_i| system_charge |phi_j>| over the eigenbasis of the
/// (nondegenerate) observable. Zero iff an exact ideal interaction is
/// compatible with the additive conservation law.
double way_obstruction(const WaySetup& setup);

/// Lower bound on the measurement distortion for a spin component when the
/// total angular momentum is conserved: 1 / (8 <L^2>), hbar = 1.
double way_distortion_bound(double l2_mean);

/// Residual of the best pointer readout for a candidate premeasurement
/// unitary: minimum over orthonormal pointer sets of the mean squared norm
/// of U(|phi_i>|ready>) - |phi_i>|pointer_i>.
double way_readout_distortion(const ComplexMatrix& u,
                              const std::vector<ComplexVector>& system_basis,
                              const ComplexVector& ready);

/// Project a Hermitian generator onto the commutant of a conserved charge,
/// so that exp(i t result) commutes with the charge.
ComplexMatrix commutant_project(const ComplexMatrix& h,
                                const ComplexMatrix& charge);

/// Spin-l operators for a (2l+1)-dimensional factor.
struct SpinOperators {
  ComplexMatrix x, y, z;
  ComplexMatrix squared;  // x^2 + y^2 + z^2 = l(l+1) I
};
SpinOperators spin_operators(std::size_t dim);

struct WayDistortionSample {
  double epsilon_sq;
  double bound;
};

/// One draw of the falsification check: a random charge-conserving unitary
/// on spin-1/2 (x) spin-l, measuring sigma_x against conserved
/// S_z + L_z, with a random ready state.
WayDistortionSample way_sample_distortion(std::size_t apparatus_dim, Rng& rng);

}  // namespace nosig
