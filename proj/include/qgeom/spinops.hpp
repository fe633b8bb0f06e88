#pragma once

// Named two-qubit operators as explicit 4x4 matrices in the basis
// (up-up, up-down, down-up, down-down). Qubit 1 is the left tensor factor.

#include <string_view>

#include "qgeom/linalg.hpp"

namespace qgeom {

// S0 spans {up-down, down-up} (zero total Sz); S1 spans {up-up, down-down}.
enum class Sector { S0, S1 };

enum class Axis { X, Y, Z };
enum class Qubit { First = 1, Second = 2 };
enum class Spin { Up, Down };

std::string_view to_string(Sector sector);

// Cosine and sine of the relative (S0) or summed (S1) azimuthal angle,
// with the generator they are conjugate to: dSz = S1z - S2z for S0,
// Sz = S1z + S2z for S1.
struct TrigOperatorSet {
  Sector sector;
  ComplexMatrix cos_op;
  ComplexMatrix sin_op;
  ComplexMatrix conjugate_momentum;
};

// phi_c = (pi/2)(1 - cos_op), phi_s = (pi/2) sin_op.
struct AngleOperatorPair {
  ComplexMatrix phi_c;
  ComplexMatrix phi_s;
};

// Pauli matrix in the {up, down} basis, sigma_z |up> = +|up>.
ComplexMatrix pauli(Axis axis);

// (1/2) sigma_axis embedded on the given qubit.
ComplexMatrix spin_component(Qubit qubit, Axis axis);

// (S1x^2 + S1y^2)(S2x^2 + S2y^2); equals I/4 for two spin-1/2.
ComplexMatrix transverse_spin_product();

TrigOperatorSet trig_operators(Sector sector);

AngleOperatorPair angle_operators(const TrigOperatorSet& trig);

// S1.S2 / sqrt(S1^2 S2^2) = (4/3) S1.S2, the cosine of the angle between
// the two spin vectors.
ComplexMatrix cos_big_phi();

// 1/2 +- S_z on the given qubit.
ComplexMatrix projector(Qubit qubit, Spin spin);

// exp(-i angle S_axis) on the given qubit.
ComplexMatrix rotation(Qubit qubit, Axis axis, double angle);

// Total spin projection S1z + S2z and its square.
ComplexMatrix total_sz();
ComplexMatrix total_sz_squared();

}  // namespace qgeom
