// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance c04 c09    run the named criteria
//
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "qgeom/entanglement.hpp"
#include "qgeom/sampling.hpp"
#include "qgeom/spinops.hpp"
#include "qgeom/states.hpp"

#ifndef QGEOM_CLI_PATH
#error "QGEOM_CLI_PATH must point at the qubit-geometry executable"
#endif

using namespace qgeom;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kGrid = 50;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Outcome bounded(double residual, double threshold, const std::string& extra = "") {
  std::string detail = "max residual " + sci(residual) + " (threshold " + sci(threshold) + ")";
  if (!extra.empty()) detail += "; " + extra;
  return {residual <= threshold, detail};
}

std::vector<double> thetas() {
  std::vector<double> g(kGrid);
  for (std::size_t k = 0; k < kGrid; ++k) g[k] = kPi * static_cast<double>(k) / (kGrid - 1);
  g.back() = kPi;
  return g;
}

std::vector<double> phis() {
  std::vector<double> g(kGrid);
  for (std::size_t k = 0; k < kGrid; ++k) g[k] = 2 * kPi * static_cast<double>(k) / kGrid;
  return g;
}

DensityMatrix pure(Sector sector, double theta, double phi) {
  return density_from_pure(pure_state(PureStateParams(sector, theta, phi)));
}

std::pair<std::size_t, std::size_t> sector_pair(Sector s) {
  return s == Sector::S0 ? std::pair<std::size_t, std::size_t>{1, 2} : std::pair<std::size_t, std::size_t>{0, 3};
}

double eigen_residual(const ComplexMatrix& op, std::size_t i, std::size_t j, Complex b, double eigenvalue) {
  std::vector<Complex> v(4);
  v[i] = 1.0 / std::sqrt(2.0);
  v[j] = b / std::sqrt(2.0);
  const auto w = mat_vec(op, v);
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(w[k] - eigenvalue * v[k]));
  return worst;
}

double spectrum_residual(const ComplexMatrix& op, std::vector<double> expected) {
  const std::vector<double> got = hermitian_eig(op).eigenvalues;
  std::sort(expected.rbegin(), expected.rend());
  double worst = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) worst = std::max(worst, std::abs(got[k] - expected[k]));
  return worst;
}

ComplexMatrix restrict_to(const ComplexMatrix& op, Sector s) {
  const auto [i, j] = sector_pair(s);
  return ComplexMatrix{{op(i, i), op(i, j)}, {op(j, i), op(j, j)}};
}

Outcome c01() {
  double worst = 0.0;
  for (Sector s : {Sector::S0, Sector::S1}) {
    const TrigOperatorSet t = trig_operators(s);
    worst = std::max(worst, max_abs_diff(commutator(t.sin_op, t.conjugate_momentum), kI * t.cos_op));
    worst = std::max(worst, max_abs_diff(commutator(t.cos_op, t.conjugate_momentum), -kI * t.sin_op));
  }
  return bounded(worst, 1e-13, "[sin, p] = i cos and [cos, p] = -i sin");
}

Outcome c02() {
  double worst = 0.0;
  for (Sector s : {Sector::S0, Sector::S1}) {
    const TrigOperatorSet t = trig_operators(s);
    const auto [i, j] = sector_pair(s);
    for (double sign : {1.0, -1.0}) {
      worst = std::max(worst, eigen_residual(t.cos_op, i, j, sign, sign));
      worst = std::max(worst, eigen_residual(t.sin_op, i, j, sign * kI, sign));
    }
  }
  return bounded(worst, 1e-13);
}

Outcome c03() {
  double worst = 0.0;
  for (Sector s : {Sector::S0, Sector::S1}) {
    const AngleOperatorPair a = angle_operators(trig_operators(s));
    worst = std::max(worst, spectrum_residual(restrict_to(a.phi_c, s), {0, kPi}));
    worst = std::max(worst, spectrum_residual(restrict_to(a.phi_s, s), {kPi / 2, -kPi / 2}));
    worst = std::max(worst, spectrum_residual(a.phi_c, {0, kPi / 2, kPi / 2, kPi}));
    worst = std::max(worst, spectrum_residual(a.phi_s, {kPi / 2, 0, 0, -kPi / 2}));
  }
  return bounded(worst, 1e-12, "in-sector {0, pi} and {+-pi/2}; full space adds pi/2 and 0 off-sector");
}

Outcome c04() {
  double means = 0.0;
  double conc = 0.0;
  for (Sector s : {Sector::S0, Sector::S1}) {
    for (double theta : thetas()) {
      for (double phi : phis()) {
        const DensityMatrix rho = pure(s, theta, phi);
        const TrigExpectations e = trig_expectations(rho, s);
        means = std::max(means, std::abs(e.cos_mean - std::sin(theta) * std::cos(phi)));
        means = std::max(means, std::abs(e.sin_mean - std::sin(theta) * std::sin(phi)));
        conc = std::max(conc, std::abs(geometric_concurrence(rho, s) - std::sin(theta)));
      }
    }
  }
  return bounded(std::max(means, conc), 1e-12, "means " + sci(means) + ", concurrence " + sci(conc));
}

Outcome c05() {
  const ComplexMatrix op = cos_big_phi();
  double grid = 0.0;
  double min_grid_variance = 1.0;
  for (double theta : thetas()) {
    for (double phi : phis()) {
      const DensityMatrix rho = pure(Sector::S0, theta, phi);
      const double expected = (2 * std::sin(theta) * std::cos(phi) - 1) / 3;
      grid = std::max(grid, std::abs(expectation(rho, op) - expected));
      min_grid_variance = std::min(min_grid_variance, variance(rho, op));
    }
  }
  const DensityMatrix singlet = pure(Sector::S0, kPi / 2, kPi);
  const DensityMatrix triplet = pure(Sector::S0, kPi / 2, 0.0);
  const double singlet_err = std::abs(expectation(singlet, op) + 1);
  const double triplet_err = std::abs(expectation(triplet, op) - 1.0 / 3.0);
  const double degrees = std::acos(expectation(triplet, op)) * 180 / kPi;
  // arccos(1/3) in degrees, evaluated with 30-digit arithmetic.
  const double degrees_err = std::abs(degrees - 70.5287793655093086);
  const double special_variance = std::max(variance(singlet, op), variance(triplet, op));
  const double worst = std::max({grid, singlet_err, triplet_err, degrees_err, special_variance});
  const bool separated = min_grid_variance > 1e-12;
  Outcome o = bounded(worst, 1e-12,
                      "triplet angle " + std::to_string(degrees) + " deg, special variance " +
                          sci(special_variance) + ", min grid variance " + sci(min_grid_variance));
  o.pass = o.pass && separated;
  return o;
}

Outcome c06() {
  double worst = 0.0;
  for (Sector s : {Sector::S0, Sector::S1}) {
    for (double theta : thetas()) {
      for (double phi : phis()) {
        const DensityMatrix rho = pure(s, theta, phi);
        const TrigExpectations e = trig_expectations(rho, s);
        const double c = std::sin(theta);
        worst = std::max(worst, std::abs(e.cos_variance + e.sin_variance - (2 - c * c)));
      }
    }
    for (double phi : phis()) {
      const TrigExpectations e = trig_expectations(pure(s, kPi / 2, phi), s);
      worst = std::max(worst, std::abs(e.cos_variance + e.sin_variance - 1));
    }
  }
  return bounded(worst, 1e-12, "including var sum 1 at C = 1");
}

Outcome c07() {
  double worst = 0.0;
  double oracle = 0.0;
  std::mt19937_64 rng(derive_seed(7, 0));
  for (Sector s : {Sector::S0, Sector::S1}) {
    for (int k = 0; k < 1000; ++k) {
      const StateVector v = pure_state(random_pure_params(rng, s));
      const DensityMatrix rho = density_from_pure(v);
      const double w = wootters_concurrence(rho);
      worst = std::max(worst, std::abs(geometric_concurrence(rho, s) - w));
      oracle = std::max(oracle, std::abs(w - testing::pure_concurrence(v)));
    }
  }
  return bounded(worst, 1e-10, "2000 states; oracle vs amplitude formula " + sci(oracle));
}

Outcome c08() {
  const RandomComparison r = compare_random_ensembles(10000, 42, 4);
  return bounded(r.max_abs_diff, 1e-9,
                 "10000 ensembles, mean " + sci(r.mean_abs_diff) + ", worst index " + std::to_string(r.worst_index));
}

Outcome c09() {
  double worst = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    const DensityMatrix rho = ensemble_density(werner_ensemble(p));
    const double expected = std::max(0.0, (3 * p - 1) / 2);
    worst = std::max(worst, std::abs(mixed_concurrence(rho) - expected));
    worst = std::max(worst, std::abs(wootters_concurrence(rho) - expected));
  }
  const double at = mixed_concurrence(ensemble_density(werner_ensemble(1.0 / 3.0)));
  const double above = mixed_concurrence(ensemble_density(werner_ensemble(1.0 / 3.0 + 1e-3)));
  const double below = mixed_concurrence(ensemble_density(werner_ensemble(1.0 / 3.0 - 1e-3)));
  const bool threshold = at <= 1e-12 && below == 0.0 && above > 1e-4;
  Outcome o = bounded(worst, 1e-10,
                      "C(1/3) = " + sci(at) + ", C(1/3 + 1e-3) = " + sci(above) + ", C(1/3 - 1e-3) = " + sci(below));
  o.pass = o.pass && threshold;
  return o;
}

Outcome c10() {
  double worst = 0.0;
  std::mt19937_64 rng(derive_seed(10, 0));
  for (int k = 0; k < 500; ++k) {
    const double alpha = 2 * kPi * uniform01(rng) - kPi;
    std::vector<EnsembleTerm> terms;
    const std::size_t n = 1 + k % 3;
    double left = 1.0;
    for (std::size_t t = 0; t < n; ++t) {
      const double w = t + 1 == n ? left : left * (0.2 + 0.6 * uniform01(rng));
      left -= w;
      terms.push_back({w, random_pure_params(rng, Sector::S0)});
    }
    const DensityMatrix rho = ensemble_density(Ensemble(terms));
    const ComplexMatrix u = rotation(Qubit::First, Axis::Z, alpha);
    const DensityMatrix moved = DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
    const TrigExpectations a = trig_expectations(rho, Sector::S0);
    const TrigExpectations b = trig_expectations(moved, Sector::S0);
    worst = std::max(worst, std::abs(b.cos_mean - (std::cos(alpha) * a.cos_mean - std::sin(alpha) * a.sin_mean)));
    worst = std::max(worst, std::abs(b.sin_mean - (std::sin(alpha) * a.cos_mean + std::cos(alpha) * a.sin_mean)));
    worst = std::max(worst,
                     std::abs(geometric_concurrence(moved, Sector::S0) - geometric_concurrence(rho, Sector::S0)));
    worst = std::max(worst, std::abs(mixed_concurrence(moved) - mixed_concurrence(rho)));
  }
  return bounded(worst, 1e-12, "500 rotated S0 states and mixtures");
}

Outcome c11() {
  double worst = 0.0;
  for (double theta : thetas()) {
    for (double phi : phis()) {
      worst = std::max(worst, geometric_concurrence(pure(Sector::S1, theta, phi), Sector::S0));
      worst = std::max(worst, geometric_concurrence(pure(Sector::S0, theta, phi), Sector::S1));
    }
  }
  std::mt19937_64 rng(derive_seed(11, 0));
  for (int k = 0; k < 1000; ++k) {
    worst = std::max(worst, geometric_concurrence(density_from_pure(pure_state(random_pure_params(rng, Sector::S1))),
                                                  Sector::S0));
    worst = std::max(worst, geometric_concurrence(density_from_pure(pure_state(random_pure_params(rng, Sector::S0))),
                                                  Sector::S1));
  }
  return bounded(worst, 1e-13);
}

bool capture(const std::string& command, std::string& out) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  return pclose(pipe) == 0;
}

Outcome c12() {
  const std::string base = std::string("\"") + QGEOM_CLI_PATH + "\" compare-random --samples 10000 --seed 42";
  const std::vector<std::string> variants = {base, base, base + " --shards 4", base + " --shards 7"};
  std::vector<std::string> outputs(variants.size());
  for (std::size_t k = 0; k < variants.size(); ++k) {
    if (!capture(variants[k], outputs[k])) return {false, "command failed: " + variants[k]};
  }
  bool same = true;
  for (const auto& o : outputs) same = same && o == outputs.front() && !o.empty();
  return {same, std::to_string(outputs.front().size()) + " bytes, runs: 2 unsharded, shards 4 and 7, " +
                    (same ? "byte-identical" : "outputs differ")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"c01", "commutator identities, unit coefficient", c01},
      {"c02", "trigonometric eigenstates", c02},
      {"c03", "angle-operator spectra", c03},
      {"c04", "trigonometric means and geometric concurrence on the grid", c04},
      {"c05", "cos Phi closed form, singlet and triplet", c05},
      {"c06", "variance identity 2 - C^2", c06},
      {"c07", "pure-state oracle equivalence", c07},
      {"c08", "mixed-state oracle equivalence", c08},
      {"c09", "Werner family and separability threshold", c09},
      {"c10", "rotation covariance", c10},
      {"c11", "cross-sector nulls", c11},
      {"c12", "CLI determinism", c12},
  };

  std::vector<std::string> selected(argv + 1, argv + argc);
  bool all = true;
  int ran = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << ": " << o.detail << "\n";
  }
  if (ran == 0) {
    std::cerr << "no matching criteria\n";
    return 2;
  }
  return all ? 0 : 1;
}
