#pragma once

#include <optional>
#include <string>

#include "qgeom/linalg.hpp"
#include "qgeom/spinops.hpp"
#include "qgeom/states.hpp"

namespace qgeom {

struct TrigExpectations {
  Sector sector;
  double cos_mean;
  double sin_mean;
  double cos_variance;
  double sin_variance;
};

struct BigPhiStats {
  double mean;
  double variance;
};

// <P1^m P2^m'> for the four spin configurations.
struct ProjectorExpectations {
  double uu;
  double ud;
  double du;
  double dd;
};

struct ConcurrenceReport {
  double c_s0;
  double c_s1;
  ProjectorExpectations projectors;
  // Absent when rho is outside the Sz^2-symmetric class.
  std::optional<double> c_mixed;
  std::string c_mixed_unavailable_reason;
  double c_wootters;
  // |c_mixed - c_wootters| when c_mixed is available.
  std::optional<double> residual;
  double entanglement_of_formation;
  TrigExpectations s0;
  TrigExpectations s1;
  BigPhiStats big_phi;
};

// Re Tr(rho op). Throws ContractViolation for a non-Hermitian op or an
// imaginary residue above 1e-12.
double expectation(const DensityMatrix& rho, const ComplexMatrix& op);

// <op^2> - <op>^2. Round-off down to -1e-12 is clamped to zero; anything
// more negative throws ContractViolation.
double variance(const DensityMatrix& rho, const ComplexMatrix& op);

TrigExpectations trig_expectations(const DensityMatrix& rho, Sector sector);

BigPhiStats big_phi_stats(const DensityMatrix& rho);

ProjectorExpectations projector_expectations(const DensityMatrix& rho);

// sqrt(<cos>^2 + <sin>^2) for the sector's trigonometric operators.
double geometric_concurrence(const DensityMatrix& rho, Sector sector);

// max(0, C - 2 sqrt(<uu><dd>), C~ - 2 sqrt(<ud><du>)). Throws
// NotInClassError unless validate_sz2_symmetry(rho, kSz2SymmetryTol).
double mixed_concurrence(const DensityMatrix& rho);

// General two-qubit concurrence max(0, l1 - l2 - l3 - l4) from the
// spin-flipped state (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
double wootters_concurrence(const DensityMatrix& rho);

// h((1 + sqrt(1 - c^2)) / 2) with h the binary entropy in bits.
double entanglement_of_formation(double c);

ConcurrenceReport analyze(const DensityMatrix& rho);

}  // namespace qgeom
