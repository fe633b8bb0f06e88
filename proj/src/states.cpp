#include "qgeom/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgeom/errors.hpp"

namespace qgeom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm_squared(const std::array<Complex, 4>& a) {
  double sum = 0.0;
  for (const auto& z : a) sum += std::norm(z);
  return sum;
}

double reduce_angle(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative number can round back up to exactly 2 pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace

PureStateParams::PureStateParams(Sector sector, double theta, double phi)
    : sector_(sector), theta_(theta), phi_(0.0) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw DomainError("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  phi_ = reduce_angle(phi);
}

StateVector::StateVector(const std::array<Complex, 4>& amplitudes) : amplitudes_(amplitudes) {
  for (const auto& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("state amplitudes must be finite");
    }
  }
  const double n2 = norm_squared(amplitudes_);
  if (std::abs(std::sqrt(n2) - 1.0) > kNormTol) {
    throw DomainError("state vector is not normalized (norm^2 = " + std::to_string(n2) + ")");
  }
}

StateVector StateVector::normalized(const std::array<Complex, 4>& amplitudes) {
  const double n = std::sqrt(norm_squared(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero vector");
  std::array<Complex, 4> scaled = amplitudes;
  for (auto& z : scaled) z /= n;
  return StateVector(scaled);
}

Complex inner(const StateVector& a, const StateVector& b) {
  Complex sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) sum += std::conj(a[k]) * b[k];
  return sum;
}

bool same_ray(const StateVector& a, const StateVector& b, double tol) {
  return std::abs(std::abs(inner(a, b)) - 1.0) <= tol;
}

Ensemble::Ensemble(std::vector<EnsembleTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("ensemble must contain at least one term");
  double total = 0.0;
  for (const auto& term : terms_) {
    if (!std::isfinite(term.weight) || term.weight <= 0.0 || term.weight > 1.0) {
      throw DomainError("ensemble weight must lie in (0, 1], got " + std::to_string(term.weight));
    }
    total += term.weight;
  }
  if (std::abs(total - 1.0) > kWeightSumTol) {
    throw DomainError("ensemble weights sum to " + std::to_string(total) + ", expected 1");
  }
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix matrix) {
  if (matrix.dim() != 4) throw DomainError("density matrix must be 4x4");
  if (!matrix.all_finite()) throw DomainError("density matrix has non-finite entries");
  if (!matrix.is_hermitian(kTol)) throw DomainError("density matrix is not Hermitian");
  if (std::abs(matrix.trace() - 1.0) > kTol) throw DomainError("density matrix trace is not 1");
  const EigenDecomposition eig = hermitian_eig(matrix, kTol);
  if (eig.eigenvalues.back() < -kTol) {
    throw DomainError("density matrix has negative eigenvalue " +
                      std::to_string(eig.eigenvalues.back()));
  }
  return DensityMatrix(std::move(matrix));
}

StateVector pure_state(const PureStateParams& params) {
  const double c = std::cos(params.theta() / 2.0);
  const Complex s = std::polar(std::sin(params.theta() / 2.0), params.phi());
  std::array<Complex, 4> a{};
  if (params.sector() == Sector::S0) {
    a[1] = c;
    a[2] = s;
  } else {
    a[0] = c;
    a[3] = s;
  }
  return StateVector(a);
}

DensityMatrix density_from_pure(const StateVector& v) {
  if (std::abs(std::sqrt(norm_squared(v.amplitudes())) - 1.0) > StateVector::kNormTol) {
    throw DomainError("density_from_pure: state is not normalized");
  }
  ComplexMatrix rho(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) rho(r, c) = v[r] * std::conj(v[c]);
  }
  return DensityMatrix::from_matrix(std::move(rho));
}

DensityMatrix ensemble_density(const Ensemble& ensemble) {
  ComplexMatrix rho(4);
  for (const auto& term : ensemble.terms()) {
    const StateVector v = pure_state(term.params);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) rho(r, c) += term.weight * v[r] * std::conj(v[c]);
    }
  }
  return DensityMatrix::from_matrix(std::move(rho));
}

bool validate_sz2_symmetry(const DensityMatrix& rho, double tol) {
  const ComplexMatrix sz2 = total_sz_squared();
  return max_abs_diff(rho.matrix() * sz2, sz2 * rho.matrix()) <= tol;
}

Ensemble werner_ensemble(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) throw DomainError("Werner weight must lie in [0, 1]");
  std::vector<EnsembleTerm> terms;
  if (p > 0.0) terms.push_back({p, PureStateParams(Sector::S0, std::numbers::pi / 2.0, std::numbers::pi)});
  const double noise = (1.0 - p) / 4.0;
  if (noise > 0.0) {
    for (Sector sector : {Sector::S0, Sector::S1}) {
      terms.push_back({noise, PureStateParams(sector, 0.0, 0.0)});
      terms.push_back({noise, PureStateParams(sector, std::numbers::pi, 0.0)});
    }
  }
  return Ensemble(std::move(terms));
}

}  // namespace qgeom
