#pragma once

#include <array>
#include <vector>

#include "qgeom/linalg.hpp"
#include "qgeom/spinops.hpp"

namespace qgeom {

// (sector, theta, phi) parametrization of
//   S0: cos(theta/2)|up-down> + e^{i phi} sin(theta/2)|down-up>
//   S1: cos(theta/2)|up-up>   + e^{i phi} sin(theta/2)|down-down>
// theta must lie in [0, pi]; phi is stored reduced to [0, 2 pi).
class PureStateParams {
 public:
  PureStateParams(Sector sector, double theta, double phi);

  Sector sector() const noexcept { return sector_; }
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  friend bool operator==(const PureStateParams&, const PureStateParams&) = default;

 private:
  Sector sector_;
  double theta_;
  double phi_;
};

// Unit-norm amplitudes over (up-up, up-down, down-up, down-down).
class StateVector {
 public:
  static constexpr double kNormTol = 1e-12;

  // Throws DomainError unless the norm is 1 within kNormTol.
  explicit StateVector(const std::array<Complex, 4>& amplitudes);
  // Scales arbitrary nonzero amplitudes to unit norm.
  static StateVector normalized(const std::array<Complex, 4>& amplitudes);

  const std::array<Complex, 4>& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t k) const { return amplitudes_[k]; }

 private:
  std::array<Complex, 4> amplitudes_;
};

// <a|b>.
Complex inner(const StateVector& a, const StateVector& b);
// Equality of physical states: |<a|b>| = 1 within tol.
bool same_ray(const StateVector& a, const StateVector& b, double tol = 1e-12);

struct EnsembleTerm {
  double weight;
  PureStateParams params;
};

// Convex mixture of parametrized pure states from both sectors. Weights are
// strictly positive and sum to 1 within 1e-12.
class Ensemble {
 public:
  static constexpr double kWeightSumTol = 1e-12;

  explicit Ensemble(std::vector<EnsembleTerm> terms);

  const std::vector<EnsembleTerm>& terms() const noexcept { return terms_; }

 private:
  std::vector<EnsembleTerm> terms_;
};

// Validated density matrix: Hermitian, unit trace and PSD, each within
// kTol (1e-12).
class DensityMatrix {
 public:
  static constexpr double kTol = 1e-12;

  // Throws DomainError when any invariant fails.
  static DensityMatrix from_matrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  explicit DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {}
  ComplexMatrix matrix_;
};

StateVector pure_state(const PureStateParams& params);

DensityMatrix density_from_pure(const StateVector& v);

DensityMatrix ensemble_density(const Ensemble& ensemble);

// True iff ||rho Sz^2 - Sz^2 rho||_max <= tol, i.e. rho has no coherence
// between the S0 and S1 sectors.
bool validate_sz2_symmetry(const DensityMatrix& rho, double tol);

// Tolerance applied before the trigonometric mixed-state formula is used on
// a density matrix that did not come from an Ensemble.
inline constexpr double kSz2SymmetryTol = 1e-10;

// p * singlet + (1 - p)/4 * I, realized as an ensemble of the singlet and
// the four computational basis states. p in [0, 1].
Ensemble werner_ensemble(double p);

}  // namespace qgeom
