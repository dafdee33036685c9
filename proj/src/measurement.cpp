#include "nosig/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nosig/kernels.hpp"
#include "nosig/linalg.hpp"
#include "nosig/random_ops.hpp"

namespace nosig {

MeasurementFamily::MeasurementFamily(std::vector<ComplexMatrix> projectors,
                                     std::vector<std::string> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty())
    throw StructuralError("measurement family needs >= 1 projector");
  const std::size_t d = projectors_[0].rows();
  ComplexMatrix sum(d, d);
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    const auto& p = projectors_[i];
    if (p.rows() != d || p.cols() != d)
      throw StructuralError("projector dimensions disagree");
    if (!p.is_projector(kTol))
      throw ContractError("family member " + std::to_string(i) +
                          " is not a projector");
    sum += p;
    for (std::size_t j = 0; j < i; ++j)
      if ((p * projectors_[j]).max_abs() > kTol)
        throw ContractError("projectors " + std::to_string(i) + " and " +
                            std::to_string(j) + " are not orthogonal");
  }
  if (!sum.approx_equal(ComplexMatrix::identity(d), kTol))
    throw ContractError("projector family does not resolve the identity");
  if (labels_.empty())
    for (std::size_t i = 0; i < projectors_.size(); ++i)
      labels_.push_back(std::to_string(i));
  if (labels_.size() != projectors_.size())
    throw StructuralError("labels/projectors count mismatch");
}

MeasurementFamily MeasurementFamily::computational_basis(std::size_t d) {
  std::vector<ComplexMatrix> ps;
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix p(d, d);
    p(i, i) = 1.0;
    ps.push_back(std::move(p));
  }
  return MeasurementFamily(std::move(ps));
}

MeasurementFamily MeasurementFamily::binary(const ComplexMatrix& p,
                                            std::string label_in,
                                            std::string label_out) {
  ComplexMatrix q = ComplexMatrix::identity(p.rows());
  q -= p;
  return MeasurementFamily({p, q}, {std::move(label_in), std::move(label_out)});
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators)
    : operators_(std::move(operators)) {
  if (operators_.empty())
    throw StructuralError("Kraus channel needs >= 1 operator");
  const std::size_t d = operators_[0].rows();
  ComplexMatrix sum(d, d);
  for (const auto& a : operators_) {
    if (a.rows() != d || a.cols() != d)
      throw StructuralError("Kraus operator dimensions disagree");
    sum += a * a.adjoint();
  }
  if (!sum.approx_equal(ComplexMatrix::identity(d), kTol))
    throw ContractError("Kraus family violates sum A A^+ = I");
}

KrausChannel KrausChannel::from_left_convention(
    std::vector<ComplexMatrix> ops) {
  for (auto& c : ops) c = c.adjoint();
  return KrausChannel(std::move(ops));
}

DensityOperator measure_nonselective(const DensityOperator& rho,
                                     const MeasurementFamily& fam,
                                     std::size_t target) {
  if (fam.dim() != rho.dims().dim(target))
    throw StructuralError("family does not match the target factor");
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t k = 0; k < fam.outcomes(); ++k) {
    const ComplexMatrix p = embed(fam.projector(k), rho.dims(), target);
    out += p * rho.matrix() * p;
  }
  return {std::move(out), rho.dims()};
}

SelectiveResult measure_selective(const DensityOperator& rho,
                                  const ComplexMatrix& projector,
                                  std::size_t target) {
  if (projector.rows() != rho.dims().dim(target))
    throw StructuralError("projector does not match the target factor");
  if (!projector.is_projector(kTol))
    throw ContractError("selective measurement needs a projector");
  const ComplexMatrix p = embed(projector, rho.dims(), target);
  const double prob = trace_product(p, rho.matrix()).real();
  if (prob < 1e-12)
    throw ImpossibleOutcomeError(
        "conditioning on an outcome of probability " + std::to_string(prob));
  ComplexMatrix post = p * rho.matrix() * p;
  post *= 1.0 / prob;
  return {prob, DensityOperator(std::move(post), rho.dims())};
}

DensityOperator apply_kraus(const DensityOperator& rho, const KrausChannel& ch,
                            std::size_t target) {
  if (ch.dim() != rho.dims().dim(target))
    throw StructuralError("channel does not match the target factor");
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < ch.count(); ++i) {
    const ComplexMatrix a = embed(ch.op(i), rho.dims(), target);
    out += a.adjoint() * rho.matrix() * a;
  }
  return {std::move(out), rho.dims()};
}

void VonNeumannSetup::validate() const {
  if (apparatus_dim < system_dim + 1)
    throw StructuralError("apparatus needs >= system_dim + 1 levels");
  if (pointer_indices.size() != system_dim)
    throw StructuralError("one pointer index per system basis state required");
  if (ready_index >= apparatus_dim)
    throw StructuralError("ready index out of range");
  std::vector<std::size_t> seen = pointer_indices;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw StructuralError("pointer indices must be distinct");
  for (std::size_t p : pointer_indices) {
    if (p >= apparatus_dim) throw StructuralError("pointer index out of range");
    if (p == ready_index)
      throw StructuralError("pointer index collides with the ready state");
  }
}

ComplexMatrix vn_ideal_unitary(const VonNeumannSetup& setup) {
  setup.validate();
  const std::size_t n = setup.system_dim;
  const std::size_t m = setup.apparatus_dim;
  const std::size_t dim = n * m;

  // Build a permutation of the product basis. The ready sector is pinned by
  // the pointer map; everything else is filled in lexicographic order.
  std::vector<std::size_t> image(dim, dim);
  std::vector<bool> used(dim, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = i * m + setup.ready_index;
    const std::size_t dst = i * m + setup.pointer_indices[i];
    image[src] = dst;
    used[dst] = true;
  }
  std::size_t next = 0;
  for (std::size_t src = 0; src < dim; ++src) {
    if (image[src] != dim) continue;
    while (used[next]) ++next;
    image[src] = next;
    used[next] = true;
  }

  ComplexMatrix u(dim, dim);
  for (std::size_t src = 0; src < dim; ++src) u(image[src], src) = 1.0;
  return u;
}

double way_obstruction(const WaySetup& setup) {
  const ComplexMatrix& sigma = setup.system_observable;
  if (!sigma.is_hermitian(kTol) || !setup.system_charge.is_hermitian(kTol))
    throw ContractError("observable and charge must be Hermitian");
  auto eig = hermitian_eig(sigma);
  const std::size_t d = sigma.rows();
  for (std::size_t i = 0; i + 1 < d; ++i)
    if (eig.values[i + 1] - eig.values[i] < 1e-8)
      throw UnsupportedError(
          "degenerate observable: the eigenbasis is not unique");
  // <phi_i| charge |phi_j> in the observable eigenbasis
  const ComplexMatrix g =
      eig.vectors.adjoint() * setup.system_charge * eig.vectors;
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) worst = std::max(worst, std::abs(g(i, j)));
  return worst;
}

double way_distortion_bound(double l2_mean) {
  if (l2_mean <= 0.0)
    throw ContractError("apparatus <L^2> must be positive");
  return 1.0 / (8.0 * l2_mean);
}

double way_readout_distortion(const ComplexMatrix& u,
                              const std::vector<ComplexVector>& system_basis,
                              const ComplexVector& ready) {
  const std::size_t n = system_basis.size();
  const std::size_t ds = system_basis[0].size();
  const std::size_t da = ready.size();
  if (u.rows() != ds * da)
    throw StructuralError("unitary does not match system (x) apparatus");

  // Stack the apparatus components <phi_i| U |phi_i, ready> as columns; the
  // optimal orthonormal pointer assignment has overlap equal to the nuclear
  // norm (orthogonal Procrustes).
  ComplexMatrix overlaps(da, n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexVector in = kron(system_basis[i], ready);
    const ComplexVector out = u.apply(in);
    for (std::size_t a = 0; a < da; ++a) {
      cdouble v = 0.0;
      for (std::size_t s = 0; s < ds; ++s)
        v += std::conj(system_basis[i][s]) * out[s * da + a];
      overlaps(a, i) = v;
    }
  }
  const double best = nuclear_norm(overlaps);
  return 2.0 * (1.0 - best / static_cast<double>(n));
}

ComplexMatrix commutant_project(const ComplexMatrix& h,
                                const ComplexMatrix& charge) {
  auto eig = hermitian_eig(charge);
  ComplexMatrix hb = eig.vectors.adjoint() * h * eig.vectors;
  const std::size_t d = h.rows();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (std::abs(eig.values[r] - eig.values[c]) > 1e-9) hb(r, c) = 0.0;
  return eig.vectors * hb * eig.vectors.adjoint();
}

SpinOperators spin_operators(std::size_t dim) {
  if (dim < 1) throw StructuralError("spin factor needs dimension >= 1");
  const double l = 0.5 * static_cast<double>(dim - 1);
  ComplexMatrix lz(dim, dim), lp(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double m = l - static_cast<double>(k);  // basis ordered m = l..-l
    lz(k, k) = m;
    if (k > 0) {
      // raising: |l, m> -> sqrt(l(l+1) - m(m+1)) |l, m+1>
      lp(k - 1, k) = std::sqrt(l * (l + 1) - m * (m + 1));
    }
  }
  const ComplexMatrix lm = lp.adjoint();
  SpinOperators ops;
  ops.x = (lp + lm) * cdouble(0.5);
  ops.y = (lp - lm) * cdouble(0.0, -0.5);
  ops.z = lz;
  ops.squared = ops.x * ops.x + ops.y * ops.y + ops.z * ops.z;
  return ops;
}

WayDistortionSample way_sample_distortion(std::size_t apparatus_dim,
                                          Rng& rng) {
  if (apparatus_dim < 2)
    throw StructuralError("apparatus needs dimension >= 2");
  const SpinOperators sys = spin_operators(2);
  const SpinOperators app = spin_operators(apparatus_dim);
  const DimList dims{2, apparatus_dim};

  const ComplexMatrix charge =
      embed(sys.z, dims, 1) + embed(app.z, dims, 2);
  const ComplexMatrix gen =
      commutant_project(random_hermitian(2 * apparatus_dim, rng), charge);
  const ComplexMatrix u = expm_i_hermitian(gen, rng.uniform(0.2, 6.2));

  const ComplexVector ready = random_state_vector(apparatus_dim, rng);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::vector<ComplexVector> sigma_x_basis = {
      {inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}};

  WayDistortionSample out;
  out.epsilon_sq = way_readout_distortion(u, sigma_x_basis, ready);
  ComplexVector tmp = app.squared.apply(ready);
  const double l2_mean =
      kernels::dot_conj(ready.size(), ready.data(), tmp.data()).real();
  out.bound = way_distortion_bound(l2_mean);
  return out;
}

}  // namespace nosig
