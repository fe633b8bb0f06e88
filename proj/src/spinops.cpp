#include "qgeom/spinops.hpp"

#include <cmath>
#include <numbers>

#include "qgeom/errors.hpp"

namespace qgeom {

std::string_view to_string(Sector sector) { return sector == Sector::S0 ? "s0" : "s1"; }

ComplexMatrix pauli(Axis axis) {
  switch (axis) {
    case Axis::X:
      return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case Axis::Y:
      return ComplexMatrix{{0.0, -kI}, {kI, 0.0}};
    case Axis::Z:
      return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
  }
  throw DomainError("pauli: unknown axis");
}

ComplexMatrix spin_component(Qubit qubit, Axis axis) {
  const ComplexMatrix half_sigma = 0.5 * pauli(axis);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  switch (qubit) {
    case Qubit::First:
      return tensor_product(half_sigma, id);
    case Qubit::Second:
      return tensor_product(id, half_sigma);
  }
  throw DomainError("spin_component: qubit must be 1 or 2");
}

ComplexMatrix transverse_spin_product() {
  const auto sq = [](const ComplexMatrix& m) { return m * m; };
  const ComplexMatrix first =
      sq(spin_component(Qubit::First, Axis::X)) + sq(spin_component(Qubit::First, Axis::Y));
  const ComplexMatrix second =
      sq(spin_component(Qubit::Second, Axis::X)) + sq(spin_component(Qubit::Second, Axis::Y));
  return first * second;
}

TrigOperatorSet trig_operators(Sector sector) {
  const ComplexMatrix s1x = spin_component(Qubit::First, Axis::X);
  const ComplexMatrix s1y = spin_component(Qubit::First, Axis::Y);
  const ComplexMatrix s1z = spin_component(Qubit::First, Axis::Z);
  const ComplexMatrix s2x = spin_component(Qubit::Second, Axis::X);
  const ComplexMatrix s2y = spin_component(Qubit::Second, Axis::Y);
  const ComplexMatrix s2z = spin_component(Qubit::Second, Axis::Z);

  // The transverse product commutes with every numerator, so the order of
  // the factors is immaterial.
  const ComplexMatrix inv_norm = psd_inverse_sqrt(transverse_spin_product());

  if (sector == Sector::S0) {
    return {sector, (s1x * s2x + s1y * s2y) * inv_norm, (s1y * s2x - s1x * s2y) * inv_norm,
            s1z - s2z};
  }
  return {sector, (s1x * s2x - s1y * s2y) * inv_norm, (s1y * s2x + s1x * s2y) * inv_norm,
          s1z + s2z};
}

AngleOperatorPair angle_operators(const TrigOperatorSet& trig) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  return {half_pi * (ComplexMatrix::identity(4) - trig.cos_op), half_pi * trig.sin_op};
}

ComplexMatrix cos_big_phi() {
  ComplexMatrix dot(4);
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    dot += spin_component(Qubit::First, axis) * spin_component(Qubit::Second, axis);
  }
  // S1^2 = S2^2 = (3/4) I.
  return (4.0 / 3.0) * dot;
}

ComplexMatrix projector(Qubit qubit, Spin spin) {
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(4);
  const ComplexMatrix sz = spin_component(qubit, Axis::Z);
  return spin == Spin::Up ? half + sz : half - sz;
}

ComplexMatrix rotation(Qubit qubit, Axis axis, double angle) {
  if (!std::isfinite(angle)) throw DomainError("rotation: angle must be finite");
  // (2 S_axis)^2 = I, so the exponential series closes.
  return std::cos(angle / 2.0) * ComplexMatrix::identity(4) +
         (-2.0 * kI * std::sin(angle / 2.0)) * spin_component(qubit, axis);
}

ComplexMatrix total_sz() {
  return spin_component(Qubit::First, Axis::Z) + spin_component(Qubit::Second, Axis::Z);
}

ComplexMatrix total_sz_squared() {
  const ComplexMatrix sz = total_sz();
  return sz * sz;
}

}  // namespace qgeom
