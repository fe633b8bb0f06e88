#pragma once

// Dense complex linear algebra for the small square matrices used by the
// two-qubit operators: 2x2 single-spin, 4x4 two-spin, and the 8x8 Hermitian
// dilation used for singular values.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qgeom {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Absolute clamp applied to eigenvalues of nominally PSD matrices.
inline constexpr double kPsdClampTol = 1e-12;

class ComplexMatrix {
 public:
  // dim x dim zero matrix.
  explicit ComplexMatrix(std::size_t dim);
  // Row-major entries; entries.size() must equal dim * dim and be finite.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  // Nested rows, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  // Largest entry magnitude.
  double max_abs() const;
  bool all_finite() const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);

// Matrix-vector product; v.size() must equal m.dim().
std::vector<Complex> mat_vec(const ComplexMatrix& m, std::span<const Complex> v);

// max |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product of two 2x2 matrices. Qubit 1 is the left factor, so the
// resulting basis order is (00, 01, 10, 11) = (up-up, up-down, down-up,
// down-down).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi diagonalization. Throws ContractViolation unless
// m.is_hermitian(tol).
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = kPsdClampTol);

// Principal square root of a PSD matrix. Eigenvalues in [-tol, 0) are
// clamped to zero; anything lower throws NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol = kPsdClampTol);

// Moore-Penrose inverse of psd_sqrt(m): eigenvalues <= tol map to zero.
ComplexMatrix psd_inverse_sqrt(const ComplexMatrix& m, double tol = kPsdClampTol);

// Singular values (descending) of an arbitrary square matrix, read off the
// Hermitian dilation [[0, m], [m^dagger, 0]]. Absolute accuracy is of order
// machine epsilon times the norm of m, also for the smallest values.
std::vector<double> singular_values(const ComplexMatrix& m);

}  // namespace qgeom
