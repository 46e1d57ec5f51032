#pragma once

// Dense complex operators for one- and two-qubit systems.
//
// Two-qubit basis order is |target, ancilla> with index 2*t + a, i.e.
// |00>=0, |01>=1, |10>=2, |11>=3. Kronecker products put the target first.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mzsim {

using Complex = std::complex<double>;
using Ket = std::vector<Complex>;

/// Hermiticity, trace and unitarity tolerance.
inline constexpr double kStructuralTol = 1e-12;
/// Lower bound slack on eigenvalues for positive semidefiniteness.
inline constexpr double kSpectralTol = 1e-10;

/// Square complex matrix of dimension 2 or 4, stored row-major.
class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  /// Zero matrix. Throws InvalidInput unless dim is 2 or 4.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; the list must hold exactly dim*dim values.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major);
  ComplexMatrix(std::size_t dim, std::span<const Complex> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  /// |ket><ket|
  static ComplexMatrix projector(std::span<const Complex> ket);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return {data_.data(), dim_ * dim_}; }

  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
  friend bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs) noexcept;

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Largest elementwise |a - b|. Throws InvalidInput on dimension mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

/// Matrix-vector product.
Ket apply(const ComplexMatrix& m, std::span<const Complex> ket);

bool is_hermitian(const ComplexMatrix& m, double tol = kStructuralTol);
/// Largest |m(i,j)| over i != j.
double off_diagonal_magnitude(const ComplexMatrix& m) noexcept;
/// Eigenvalues of the Hermitian part of m, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Multiplies by the unit phase that makes the first entry with magnitude
/// above `threshold` real and positive. Works on matrices and kets alike.
ComplexMatrix canonicalize_global_phase(const ComplexMatrix& m, double threshold = 1e-9);
Ket canonicalize_global_phase(std::span<const Complex> ket, double threshold = 1e-9);
/// max_abs_diff after canonicalizing both sides.
double diff_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b);
double diff_up_to_global_phase(std::span<const Complex> a, std::span<const Complex> b);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

struct DensityTolerance {
  double structural = kStructuralTol;
  double spectral = kSpectralTol;
};

struct ValidityReport {
  double hermiticity_defect = 0.0;  // max |rho - rho^dagger|
  double trace_defect = 0.0;        // |tr(rho) - 1|
  double min_eigenvalue = 0.0;
  bool passed = false;
};

/// Report-only check of the density-operator invariants. Never throws.
ValidityReport validate_density(const ComplexMatrix& rho, DensityTolerance tol = {});
/// Single tolerance applied to all three defects.
ValidityReport validate_density(const ComplexMatrix& rho, double tol);

/// Hermitian, unit-trace, positive semidefinite operator. Immutable.
class DensityOperator {
 public:
  /// Validates `m`; throws InvalidInput naming the violated invariant.
  explicit DensityOperator(ComplexMatrix m, DensityTolerance tol = {});

  static DensityOperator pure(std::span<const Complex> ket);
  static DensityOperator maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  Complex operator()(std::size_t row, std::size_t col) const noexcept { return m_(row, col); }

 private:
  ComplexMatrix m_;
};

/// Unitary operator. Immutable.
class GateMatrix {
 public:
  /// Validates U^dagger U = I within `tol`; throws InvalidInput otherwise.
  explicit GateMatrix(ComplexMatrix m, double tol = kStructuralTol);

  static GateMatrix identity(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  Complex operator()(std::size_t row, std::size_t col) const noexcept { return m_(row, col); }

  GateMatrix adjoint() const;
  friend GateMatrix operator*(const GateMatrix& lhs, const GateMatrix& rhs);

 private:
  ComplexMatrix m_;
};

/// Kronecker product a (target) x b (ancilla). Both factors must be 2x2.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
GateMatrix tensor(const GateMatrix& a, const GateMatrix& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
Ket tensor(std::span<const Complex> a, std::span<const Complex> b);

/// Sum_k (I x <k|) rho (I x |k>). Throws InvalidInput unless rho is 4x4.
DensityOperator partial_trace_ancilla(const DensityOperator& rho);

/// U rho U^dagger. Throws InvalidInput on dimension mismatch.
DensityOperator apply_unitary(const DensityOperator& rho, const GateMatrix& u);

/// tr(obs rho). Throws InvalidInput if obs is not Hermitian or dimensions differ.
double expectation(const DensityOperator& rho, const ComplexMatrix& obs);

}  // namespace mzsim
