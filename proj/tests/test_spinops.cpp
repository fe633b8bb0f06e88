#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qgeom/entanglement.hpp"
#include "qgeom/spinops.hpp"
#include "qgeom/states.hpp"

using namespace qgeom;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> basis(std::size_t k) {
  std::vector<Complex> e(4);
  e[k] = 1.0;
  return e;
}

double residual(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

std::vector<Complex> pair_state(std::size_t i, std::size_t j, Complex b) {
  std::vector<Complex> v(4);
  v[i] = 1.0;
  v[j] = b;
  return v;
}

std::vector<Complex> scaled(std::vector<Complex> v, Complex s) {
  for (auto& z : v) z *= s;
  return v;
}

}  // namespace

TEST_SUITE("spinops") {

TEST_CASE("Pauli conventions") {
  CHECK(pauli(Axis::Z) == ComplexMatrix::diagonal({1, -1}));
  CHECK(pauli(Axis::X) == (ComplexMatrix{{0, 1}, {1, 0}}));
  CHECK(pauli(Axis::Y) == (ComplexMatrix{{0, -kI}, {kI, 0}}));
}

TEST_CASE("spin components embed on the right qubit") {
  CHECK(spin_component(Qubit::First, Axis::Z) == ComplexMatrix::diagonal({0.5, 0.5, -0.5, -0.5}));
  CHECK(spin_component(Qubit::Second, Axis::Z) == ComplexMatrix::diagonal({0.5, -0.5, 0.5, -0.5}));
  // S1x |up-down> = 1/2 |down-down>.
  CHECK(residual(mat_vec(spin_component(Qubit::First, Axis::X), basis(1)), scaled(basis(3), 0.5)) == 0.0);
  for (Qubit q : {Qubit::First, Qubit::Second}) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      const ComplexMatrix s = spin_component(q, a);
      CHECK(max_abs_diff(s * s, 0.25 * ComplexMatrix::identity(4)) == 0.0);
    }
  }
}

TEST_CASE("transverse product is I/4") {
  CHECK(max_abs_diff(transverse_spin_product(), 0.25 * ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("S0 cosine couples only up-down and down-up") {
  const ComplexMatrix c = trig_operators(Sector::S0).cos_op;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) {
      const bool coupled = (r == 1 && k == 2) || (r == 2 && k == 1);
      CHECK(std::abs(c(r, k) - Complex(coupled ? 1.0 : 0.0)) <= 1e-15);
    }
  }
}

TEST_CASE("trigonometric eigenstates in both sectors") {
  for (Sector sector : {Sector::S0, Sector::S1}) {
    const TrigOperatorSet t = trig_operators(sector);
    const std::size_t i = sector == Sector::S0 ? 1 : 0;
    const std::size_t j = sector == Sector::S0 ? 2 : 3;
    for (double sign : {1.0, -1.0}) {
      const auto cv = pair_state(i, j, sign);
      CHECK(residual(mat_vec(t.cos_op, cv), scaled(cv, sign)) <= 1e-13);
      const auto sv = pair_state(i, j, sign * kI);
      CHECK(residual(mat_vec(t.sin_op, sv), scaled(sv, sign)) <= 1e-13);
    }
  }
}

TEST_CASE("trigonometric operators are Hermitian with spectrum {1, 0, 0, -1}") {
  for (Sector sector : {Sector::S0, Sector::S1}) {
    const TrigOperatorSet t = trig_operators(sector);
    for (const ComplexMatrix* op : {&t.cos_op, &t.sin_op}) {
      CHECK(op->is_hermitian(1e-13));
      const auto ev = hermitian_eig(*op).eigenvalues;
      CHECK(std::abs(ev[0] - 1) <= 1e-13);
      CHECK(std::abs(ev[1]) <= 1e-13);
      CHECK(std::abs(ev[2]) <= 1e-13);
      CHECK(std::abs(ev[3] + 1) <= 1e-13);
    }
  }
}

TEST_CASE("trigonometric operators annihilate the other sector") {
  for (Sector sector : {Sector::S0, Sector::S1}) {
    const TrigOperatorSet t = trig_operators(sector);
    const std::array<std::size_t, 2> off_sector =
        sector == Sector::S0 ? std::array<std::size_t, 2>{0, 3} : std::array<std::size_t, 2>{1, 2};
    for (std::size_t k : off_sector) {
      const std::vector<Complex> zero(4);
      CHECK(residual(mat_vec(t.cos_op, basis(k)), zero) <= 1e-13);
      CHECK(residual(mat_vec(t.sin_op, basis(k)), zero) <= 1e-13);
    }
  }
}

TEST_CASE("commutators with the conjugate generator carry a factor of two") {
  // The unit-coefficient relation [sin, p] = i cos does not hold
  // for these operators: the exact relation is [sin, p] = 2i cos. The
  // acceptance suite records the unit-coefficient form as failing.
  for (Sector sector : {Sector::S0, Sector::S1}) {
    const TrigOperatorSet t = trig_operators(sector);
    CHECK(max_abs_diff(commutator(t.sin_op, t.conjugate_momentum), 2.0 * kI * t.cos_op) <= 1e-13);
    CHECK(max_abs_diff(commutator(t.cos_op, t.conjugate_momentum), -2.0 * kI * t.sin_op) <= 1e-13);
    CHECK(max_abs_diff(commutator(t.sin_op, t.conjugate_momentum), kI * t.cos_op) == doctest::Approx(1.0));
  }
  CHECK(trig_operators(Sector::S0).conjugate_momentum ==
        spin_component(Qubit::First, Axis::Z) - spin_component(Qubit::Second, Axis::Z));
  CHECK(trig_operators(Sector::S1).conjugate_momentum == total_sz());
}

TEST_CASE("cosine and sine never commute inside a sector") {
  for (Sector sector : {Sector::S0, Sector::S1}) {
    const TrigOperatorSet t = trig_operators(sector);
    const ComplexMatrix c = commutator(t.cos_op, t.sin_op);
    CHECK(c.max_abs() == doctest::Approx(2.0).epsilon(1e-13));
    const ComplexMatrix sum = t.cos_op * t.cos_op + t.sin_op * t.sin_op;
    const std::size_t i = sector == Sector::S0 ? 1 : 0;
    const std::size_t j = sector == Sector::S0 ? 2 : 3;
    CHECK(std::abs(sum(i, i) - 2.0) <= 1e-13);
    CHECK(std::abs(sum(j, j) - 2.0) <= 1e-13);
    CHECK(std::abs(sum(i, j)) <= 1e-13);
  }
}

TEST_CASE("angle operators: eigenvalues on the cos/sin eigenstates") {
  const TrigOperatorSet t = trig_operators(Sector::S0);
  const AngleOperatorPair angles = angle_operators(t);
  const auto triplet = pair_state(1, 2, 1.0);
  const auto singlet = pair_state(1, 2, -1.0);
  CHECK(residual(mat_vec(angles.phi_c, triplet), scaled(triplet, 0.0)) <= 1e-13);
  CHECK(residual(mat_vec(angles.phi_c, singlet), scaled(singlet, kPi)) <= 1e-13);
  const auto plus = pair_state(1, 2, kI);
  const auto minus = pair_state(1, 2, -kI);
  CHECK(residual(mat_vec(angles.phi_s, plus), scaled(plus, kPi / 2)) <= 1e-13);
  CHECK(residual(mat_vec(angles.phi_s, minus), scaled(minus, -kPi / 2)) <= 1e-13);
}

TEST_CASE("phi_c equals arccos of the cosine operator") {
  for (Sector sector : {Sector::S0, Sector::S1}) {
    const TrigOperatorSet t = trig_operators(sector);
    const ComplexMatrix spectral = testing::spectral_function(
        t.cos_op, [](double x) { return std::acos(std::clamp(x, -1.0, 1.0)); });
    CHECK(max_abs_diff(spectral, angle_operators(t).phi_c) <= 1e-12);
  }
}

TEST_CASE("cos Phi operator") {
  const ComplexMatrix op = cos_big_phi();
  const auto ev = hermitian_eig(op).eigenvalues;
  // Triplet manifold 1/3 (threefold), singlet -1.
  CHECK(std::abs(ev[0] - 1.0 / 3.0) <= 1e-14);
  CHECK(std::abs(ev[2] - 1.0 / 3.0) <= 1e-14);
  CHECK(std::abs(ev[3] + 1.0) <= 1e-14);
  const DensityMatrix triplet = density_from_pure(pure_state(PureStateParams(Sector::S0, kPi / 2, 0.0)));
  CHECK(std::acos(expectation(triplet, op)) * 180.0 / kPi == doctest::Approx(70.5287793655093).epsilon(1e-12));
}

TEST_CASE("projectors") {
  CHECK(projector(Qubit::First, Spin::Up) == ComplexMatrix::diagonal({1, 1, 0, 0}));
  for (Qubit q : {Qubit::First, Qubit::Second}) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      const ComplexMatrix p = projector(q, s);
      CHECK(p * p == p);
      CHECK(p.is_hermitian(0.0));
    }
  }
  const double theta = 1.1;
  const DensityMatrix rho = density_from_pure(pure_state(PureStateParams(Sector::S1, theta, 0.4)));
  const double uu =
      expectation(rho, projector(Qubit::First, Spin::Up) * projector(Qubit::Second, Spin::Up));
  CHECK(uu == doctest::Approx(std::pow(std::cos(theta / 2), 2)).epsilon(1e-14));
}

TEST_CASE("rotations") {
  CHECK(max_abs_diff(rotation(Qubit::First, Axis::Z, 0.0), ComplexMatrix::identity(4)) == 0.0);
  for (Qubit q : {Qubit::First, Qubit::Second}) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      for (double angle : {0.3, 1.7, -2.2, 6.0}) {
        const ComplexMatrix u = rotation(q, a, angle);
        CHECK(u.is_unitary(1e-13));
        CHECK(max_abs_diff(u * rotation(q, a, -angle), ComplexMatrix::identity(4)) <= 1e-13);
      }
    }
  }
}

TEST_CASE("rotating the first spin of the triplet produces |Psi(pi/2, phi)>") {
  const StateVector triplet = StateVector::normalized({0.0, 1.0, 1.0, 0.0});
  for (double phi : {0.0, 0.5, 2.0, kPi, 4.5}) {
    const auto rotated = mat_vec(rotation(Qubit::First, Axis::Z, phi), triplet.amplitudes());
    const StateVector got({rotated[0], rotated[1], rotated[2], rotated[3]});
    CHECK(same_ray(got, pure_state(PureStateParams(Sector::S0, kPi / 2, phi))));
  }
}

TEST_CASE("reversing the second spin maps S0 states to S1 states with phi + pi") {
  const ComplexMatrix flip = rotation(Qubit::Second, Axis::Y, kPi);
  for (double theta : {0.0, 0.4, kPi / 2, 2.9}) {
    for (double phi : {0.0, 1.3, 5.9}) {
      const auto v = mat_vec(flip, pure_state(PureStateParams(Sector::S0, theta, phi)).amplitudes());
      const StateVector got({v[0], v[1], v[2], v[3]});
      CHECK(same_ray(got, pure_state(PureStateParams(Sector::S1, theta, phi + kPi))));
    }
  }
}

}
