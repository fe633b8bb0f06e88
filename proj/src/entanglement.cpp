#include "qgeom/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgeom/errors.hpp"

namespace qgeom {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kImaginaryResidueTol = 1e-12;
constexpr double kVarianceClampTol = 1e-12;

const TrigOperatorSet& cached_trig(Sector sector) {
  static const TrigOperatorSet s0 = trig_operators(Sector::S0);
  static const TrigOperatorSet s1 = trig_operators(Sector::S1);
  return sector == Sector::S0 ? s0 : s1;
}

const ComplexMatrix& cached_spin_flip() {
  static const ComplexMatrix yy = tensor_product(pauli(Axis::Y), pauli(Axis::Y));
  return yy;
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

double binary_entropy(double x) {
  const auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(x) + term(1.0 - x);
}

}  // namespace

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
  if (op.dim() != 4) throw DimensionError("expectation: operator must be 4x4");
  if (!op.is_hermitian(kHermitianTol)) throw ContractViolation("expectation: operator is not Hermitian");
  const Complex value = (rho.matrix() * op).trace();
  if (std::abs(value.imag()) > kImaginaryResidueTol) {
    throw ContractViolation("expectation: imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

double variance(const DensityMatrix& rho, const ComplexMatrix& op) {
  const double mean = expectation(rho, op);
  const double v = expectation(rho, op * op) - mean * mean;
  if (v >= 0.0) return v;
  if (v >= -kVarianceClampTol) return 0.0;
  throw ContractViolation("variance: negative value " + std::to_string(v));
}

TrigExpectations trig_expectations(const DensityMatrix& rho, Sector sector) {
  const TrigOperatorSet& ops = cached_trig(sector);
  return {sector, expectation(rho, ops.cos_op), expectation(rho, ops.sin_op),
          variance(rho, ops.cos_op), variance(rho, ops.sin_op)};
}

BigPhiStats big_phi_stats(const DensityMatrix& rho) {
  static const ComplexMatrix op = cos_big_phi();
  return {expectation(rho, op), variance(rho, op)};
}

ProjectorExpectations projector_expectations(const DensityMatrix& rho) {
  const auto joint = [&](Spin a, Spin b) {
    const double value =
        expectation(rho, projector(Qubit::First, a) * projector(Qubit::Second, b));
    return clamp_unit(value);
  };
  return {joint(Spin::Up, Spin::Up), joint(Spin::Up, Spin::Down), joint(Spin::Down, Spin::Up),
          joint(Spin::Down, Spin::Down)};
}

double geometric_concurrence(const DensityMatrix& rho, Sector sector) {
  const TrigOperatorSet& ops = cached_trig(sector);
  const double c = expectation(rho, ops.cos_op);
  const double s = expectation(rho, ops.sin_op);
  return clamp_unit(std::hypot(c, s));
}

double mixed_concurrence(const DensityMatrix& rho) {
  if (!validate_sz2_symmetry(rho, kSz2SymmetryTol)) {
    throw NotInClassError("mixed_concurrence: rho does not commute with Sz^2");
  }
  const ProjectorExpectations p = projector_expectations(rho);
  const double c0 = geometric_concurrence(rho, Sector::S0) - 2.0 * std::sqrt(p.uu * p.dd);
  const double c1 = geometric_concurrence(rho, Sector::S1) - 2.0 * std::sqrt(p.ud * p.du);
  return std::max({0.0, c0, c1});
}

double wootters_concurrence(const DensityMatrix& rho) {
  // The l_k are the singular values of sqrt(rho) sqrt(rho~); with
  // sqrt(rho~) = Y sqrt(rho)* Y and Y unitary these equal the singular
  // values of sqrt(rho) Y sqrt(rho)*.
  const ComplexMatrix root = psd_sqrt(rho.matrix(), kPsdClampTol);
  const std::vector<double> l = singular_values(root * cached_spin_flip() * root.conjugate());
  return clamp_unit(l[0] - l[1] - l[2] - l[3]);
}

double entanglement_of_formation(double c) {
  if (!std::isfinite(c) || c < 0.0 || c > 1.0) {
    throw DomainError("entanglement_of_formation: concurrence must lie in [0, 1]");
  }
  if (c == 0.0) return 0.0;
  if (c == 1.0) return 1.0;
  return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

ConcurrenceReport analyze(const DensityMatrix& rho) {
  ConcurrenceReport report{};
  report.s0 = trig_expectations(rho, Sector::S0);
  report.s1 = trig_expectations(rho, Sector::S1);
  report.c_s0 = geometric_concurrence(rho, Sector::S0);
  report.c_s1 = geometric_concurrence(rho, Sector::S1);
  report.projectors = projector_expectations(rho);
  report.c_wootters = wootters_concurrence(rho);
  report.entanglement_of_formation = entanglement_of_formation(report.c_wootters);
  report.big_phi = big_phi_stats(rho);
  try {
    report.c_mixed = mixed_concurrence(rho);
    report.residual = std::abs(*report.c_mixed - report.c_wootters);
  } catch (const NotInClassError&) {
    report.c_mixed_unavailable_reason = "rho does not commute with Sz^2";
  }
  return report;
}

}  // namespace qgeom
