#include "qgeom/cli/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "qgeom/cli/format.hpp"
#include "qgeom/entanglement.hpp"
#include "qgeom/sampling.hpp"
#include "qgeom/spinops.hpp"
#include "qgeom/states.hpp"

namespace qgeom::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct MaxResidual {
  double value = 0.0;
  void add(double r) { value = std::max(value, std::isnan(r) ? INFINITY : r); }
};

PropertyCheck check(std::string name, double residual, double threshold, std::string detail = {}) {
  return {std::move(name), residual <= threshold, residual, threshold, std::move(detail)};
}

std::array<std::size_t, 2> sector_indices(Sector sector) {
  return sector == Sector::S0 ? std::array<std::size_t, 2>{1, 2} : std::array<std::size_t, 2>{0, 3};
}

ComplexMatrix restrict_to(const ComplexMatrix& m, Sector sector) {
  const auto idx = sector_indices(sector);
  ComplexMatrix out(2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) out(r, c) = m(idx[r], idx[c]);
  }
  return out;
}

double spectrum_residual(const ComplexMatrix& m, std::vector<double> expected) {
  const std::vector<double> got = hermitian_eig(m).eigenvalues;
  std::sort(expected.rbegin(), expected.rend());
  double worst = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) worst = std::max(worst, std::abs(got[k] - expected[k]));
  return worst;
}

double eigen_residual(const ComplexMatrix& op, const StateVector& v, double lambda) {
  const std::vector<Complex> image = mat_vec(op, v.amplitudes());
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(image[k] - lambda * v[k]));
  return worst;
}

// Two-component superposition a|i> + b|j> of basis states, normalized.
StateVector basis_pair(std::size_t i, std::size_t j, Complex a, Complex b) {
  std::array<Complex, 4> amp{};
  amp[i] = a;
  amp[j] = b;
  return StateVector::normalized(amp);
}

DensityMatrix conjugated(const DensityMatrix& rho, const ComplexMatrix& u) {
  return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
}

void for_grid(const VerifyOptions& opt, const std::function<void(double, double)>& body) {
  for (double theta : theta_grid(opt.theta_steps)) {
    for (double phi : phi_grid(opt.phi_steps)) body(theta, phi);
  }
}

DensityMatrix pure_density(Sector sector, double theta, double phi) {
  return density_from_pure(pure_state(PureStateParams(sector, theta, phi)));
}

}  // namespace

std::vector<double> theta_grid(std::size_t steps) {
  std::vector<double> out(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    out[k] = k + 1 == steps ? kPi : kPi * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  return out;
}

std::vector<double> phi_grid(std::size_t steps) {
  std::vector<double> out(steps);
  for (std::size_t k = 0; k < steps; ++k) out[k] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(steps);
  return out;
}

std::vector<PropertyCheck> run_verification(const VerifyOptions& opt) {
  std::vector<PropertyCheck> out;
  const TrigOperatorSet ops[2] = {trig_operators(Sector::S0), trig_operators(Sector::S1)};

  for (const auto& t : ops) {
    const std::string tag(to_string(t.sector));
    out.push_back(check("commutator_sin_" + tag,
                        max_abs_diff(commutator(t.sin_op, t.conjugate_momentum), kI * t.cos_op), 1e-13,
                        "[sin, p] = i cos"));
    out.push_back(check("commutator_cos_" + tag,
                        max_abs_diff(commutator(t.cos_op, t.conjugate_momentum), -kI * t.sin_op), 1e-13,
                        "[cos, p] = -i sin"));
    // The sector generators have eigenvalues +-1, so the shift between the
    // two basis states is 2 and the exact algebra carries a factor of two.
    out.push_back(check("commutator_sin_" + tag + "_factor2",
                        max_abs_diff(commutator(t.sin_op, t.conjugate_momentum), 2.0 * kI * t.cos_op),
                        1e-13, "[sin, p] = 2i cos"));
    out.push_back(check("commutator_cos_" + tag + "_factor2",
                        max_abs_diff(commutator(t.cos_op, t.conjugate_momentum), -2.0 * kI * t.sin_op),
                        1e-13, "[cos, p] = -2i sin"));
  }

  out.push_back(check("transverse_product_quarter_identity",
                      max_abs_diff(transverse_spin_product(), 0.25 * ComplexMatrix::identity(4)), 1e-15,
                      "(S1x^2+S1y^2)(S2x^2+S2y^2) = I/4"));

  {
    MaxResidual r;
    for (const auto& t : ops) {
      const auto [i, j] = sector_indices(t.sector);
      for (double sign : {1.0, -1.0}) {
        r.add(eigen_residual(t.cos_op, basis_pair(i, j, 1.0, sign), sign));
        r.add(eigen_residual(t.sin_op, basis_pair(i, j, 1.0, sign * kI), sign));
      }
    }
    out.push_back(check("trig_eigenstates", r.value, 1e-13,
                        "cos (|a> +- |b>) = +-(...), sin (|a> +- i|b>) = +-(...)"));
  }

  {
    MaxResidual r;
    for (const auto& t : ops) {
      r.add(spectrum_residual(t.cos_op, {1, 0, 0, -1}));
      r.add(spectrum_residual(t.sin_op, {1, 0, 0, -1}));
      r.add(std::max(max_abs_diff(t.cos_op, t.cos_op.adjoint()), max_abs_diff(t.sin_op, t.sin_op.adjoint())));
    }
    out.push_back(check("trig_spectra", r.value, 1e-12, "Hermitian, spectrum {1, 0, 0, -1}"));
  }

  {
    MaxResidual sector_r;
    MaxResidual full_r;
    for (const auto& t : ops) {
      const AngleOperatorPair angles = angle_operators(t);
      sector_r.add(spectrum_residual(restrict_to(angles.phi_c, t.sector), {0, kPi}));
      sector_r.add(spectrum_residual(restrict_to(angles.phi_s, t.sector), {kPi / 2, -kPi / 2}));
      full_r.add(spectrum_residual(angles.phi_c, {0, kPi / 2, kPi / 2, kPi}));
      full_r.add(spectrum_residual(angles.phi_s, {kPi / 2, 0, 0, -kPi / 2}));
    }
    out.push_back(check("angle_operator_spectrum", std::max(sector_r.value, full_r.value), 1e-12,
                        "in-sector {0, pi, +pi/2, -pi/2}; off-sector phi_c = pi/2, phi_s = 0"));
  }

  {
    // arccos applied through the eigendecomposition must match the linear form.
    MaxResidual r;
    for (const auto& t : ops) {
      const EigenDecomposition eig = hermitian_eig(t.cos_op);
      ComplexMatrix spectral(4);
      for (std::size_t k = 0; k < 4; ++k) {
        const double f = std::acos(std::clamp(eig.eigenvalues[k], -1.0, 1.0));
        for (std::size_t a = 0; a < 4; ++a) {
          for (std::size_t b = 0; b < 4; ++b) {
            spectral(a, b) += f * eig.eigenvectors(a, k) * std::conj(eig.eigenvectors(b, k));
          }
        }
      }
      r.add(max_abs_diff(spectral, angle_operators(t).phi_c));
    }
    out.push_back(check("arccos_linear_form", r.value, 1e-12, "arccos(cos) = (pi/2)(1 - cos)"));
  }

  {
    MaxResidual r;
    for (const auto& t : ops) {
      const ComplexMatrix comm = restrict_to(commutator(t.cos_op, t.sin_op), t.sector);
      const ComplexMatrix sum = restrict_to(t.cos_op * t.cos_op + t.sin_op * t.sin_op, t.sector);
      r.add(std::abs(comm.max_abs() - 2.0));
      r.add(max_abs_diff(sum, 2.0 * ComplexMatrix::identity(2)));
    }
    out.push_back(check("cos_sin_noncommuting", r.value, 1e-13, "in-sector cos^2 + sin^2 = 2, |[cos, sin]| = 2"));
  }

  {
    MaxResidual means;
    MaxResidual conc;
    MaxResidual big_phi;
    MaxResidual spread;
    MaxResidual oracle;
    MaxResidual nulls;
    double min_off_grid_variance = INFINITY;
    for_grid(opt, [&](double theta, double phi) {
      const DensityMatrix rho = pure_density(Sector::S0, theta, phi);
      const TrigExpectations e = trig_expectations(rho, Sector::S0);
      means.add(std::abs(e.cos_mean - std::sin(theta) * std::cos(phi)));
      means.add(std::abs(e.sin_mean - std::sin(theta) * std::sin(phi)));
      const double c = geometric_concurrence(rho, Sector::S0);
      conc.add(std::abs(c - std::sin(theta)));
      const BigPhiStats bp = big_phi_stats(rho);
      big_phi.add(std::abs(bp.mean - (2.0 * std::sin(theta) * std::cos(phi) - 1.0) / 3.0));
      const double sc = std::sin(theta) * std::cos(phi);
      big_phi.add(std::abs(bp.variance - (4.0 / 9.0) * (1.0 - sc * sc)));
      min_off_grid_variance = std::min(min_off_grid_variance, bp.variance);
      spread.add(std::abs(e.cos_variance + e.sin_variance - (2.0 - c * c)));
      oracle.add(std::abs(c - wootters_concurrence(rho)));
      nulls.add(geometric_concurrence(rho, Sector::S1));

      const DensityMatrix tilde = pure_density(Sector::S1, theta, phi);
      oracle.add(std::abs(geometric_concurrence(tilde, Sector::S1) - wootters_concurrence(tilde)));
      nulls.add(geometric_concurrence(tilde, Sector::S0));
    });
    out.push_back(check("pure_trig_means", means.value, 1e-12, "<cos> = sin t cos p, <sin> = sin t sin p"));
    out.push_back(check("pure_concurrence_sin_theta", conc.value, 1e-12, "C = sin theta"));
    out.push_back(check("big_phi_grid", big_phi.value, 1e-12, "<cos Phi> = (2 sin t cos p - 1)/3 and its variance"));

    const BigPhiStats singlet = big_phi_stats(pure_density(Sector::S0, kPi / 2, kPi));
    const BigPhiStats triplet = big_phi_stats(pure_density(Sector::S0, kPi / 2, 0.0));
    const double special = std::max({std::abs(singlet.mean + 1.0), std::abs(triplet.mean - 1.0 / 3.0),
                                     singlet.variance, triplet.variance});
    const bool grid_positive = min_off_grid_variance > 1e-12;
    out.push_back({"big_phi_singlet_triplet", special <= 1e-12 && grid_positive, special, 1e-12,
                   "singlet -1, triplet 1/3 (" + format_number(std::acos(1.0 / 3.0) * 180.0 / kPi) +
                       " deg), variance zero only there"});
    out.push_back(check("variance_identity", spread.value, 1e-12, "var(cos) + var(sin) = 2 - C^2"));
    out.push_back(check("oracle_pure_states", oracle.value, 1e-10, "geometric = Wootters, both sectors"));
    out.push_back(check("cross_sector_nulls", nulls.value, 1e-13, "C = 0 on S1 states, C~ = 0 on S0 states"));
  }

  {
    MaxResidual r;
    const ComplexMatrix flip = rotation(Qubit::Second, Axis::Y, kPi);
    for_grid(opt, [&](double theta, double phi) {
      const DensityMatrix mapped = conjugated(pure_density(Sector::S0, theta, phi), flip);
      r.add(max_abs_diff(mapped.matrix(), pure_density(Sector::S1, theta, phi + kPi).matrix()));
    });
    out.push_back(check("second_spin_reversal", r.value, 1e-12, "exp(-i pi S2y): S0(t, p) -> S1(t, p + pi)"));
  }

  {
    MaxResidual r;
    for (double alpha : {0.0, 0.3, 1.0, kPi / 2, 2.5, kPi, 4.0, -1.2}) {
      const ComplexMatrix rot = rotation(Qubit::First, Axis::Z, alpha);
      for_grid({.theta_steps = 9, .phi_steps = 8}, [&](double theta, double phi) {
        const DensityMatrix rho = pure_density(Sector::S0, theta, phi);
        const DensityMatrix moved = conjugated(rho, rot);
        const TrigExpectations before = trig_expectations(rho, Sector::S0);
        const TrigExpectations after = trig_expectations(moved, Sector::S0);
        r.add(std::abs(after.cos_mean - (std::cos(alpha) * before.cos_mean - std::sin(alpha) * before.sin_mean)));
        r.add(std::abs(after.sin_mean - (std::sin(alpha) * before.cos_mean + std::cos(alpha) * before.sin_mean)));
        r.add(std::abs(geometric_concurrence(moved, Sector::S0) - geometric_concurrence(rho, Sector::S0)));
      });
    }
    out.push_back(check("rotation_covariance", r.value, 1e-12, "exp(-i a S1z) rotates (<cos>, <sin>) by a"));
  }

  {
    MaxResidual r;
    for (Qubit q : {Qubit::First, Qubit::Second}) {
      for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        for (double angle : {0.0, 0.7, kPi, 5.0}) {
          const ComplexMatrix u = rotation(q, a, angle);
          r.add(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(4)));
          r.add(max_abs_diff(u * rotation(q, a, -angle), ComplexMatrix::identity(4)));
        }
      }
    }
    out.push_back(check("rotation_unitarity", r.value, 1e-13));
  }

  {
    MaxResidual r;
    for (int k = 0; k <= 10; ++k) {
      const double p = k / 10.0;
      const DensityMatrix rho = ensemble_density(werner_ensemble(p));
      const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
      r.add(std::abs(mixed_concurrence(rho) - expected));
      r.add(std::abs(wootters_concurrence(rho) - expected));
    }
    const DensityMatrix edge = ensemble_density(werner_ensemble(1.0 / 3.0));
    r.add(mixed_concurrence(edge));
    out.push_back(check("werner_family", r.value, 1e-10, "C(p) = max(0, (3p - 1)/2), zero at p = 1/3"));
  }

  {
    MaxResidual r;
    for (std::size_t i = 0; i < std::min<std::size_t>(opt.samples, 1000); ++i) {
      std::mt19937_64 rng(derive_seed(opt.seed ^ 0x5a5a5a5aULL, i));
      const DensityMatrix rho = ensemble_density(random_ensemble(rng));
      r.add(validate_sz2_symmetry(rho, 1e-12) ? 0.0 : 1.0);
    }
    out.push_back(check("ensemble_sz2_symmetry", r.value, 0.0, "[rho, Sz^2] = 0 for every ensemble"));
  }

  {
    const RandomComparison cmp = compare_random_ensembles(opt.samples, opt.seed, opt.shards);
    out.push_back(check("oracle_mixed_states", cmp.max_abs_diff, opt.tolerance,
                        std::to_string(cmp.samples) + " random ensembles, mean diff " +
                            format_number(cmp.mean_abs_diff)));
  }

  return out;
}

}  // namespace qgeom::cli
