#pragma once

#include <stdexcept>
#include <string>

namespace qgeom {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible or unsupported dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A documented precondition (Hermiticity, finiteness, ...) does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Matrix expected to be positive semidefinite has an eigenvalue below -tol.
class NotPsdError : public Error {
 public:
  using Error::Error;
};

// Scalar argument outside its admitted range (angles, weights, norms).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Density matrix outside the Sz^2-conserving class where the
// trigonometric mixed-state concurrence formula applies.
class NotInClassError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgeom
