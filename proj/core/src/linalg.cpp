#include "mzsim/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mzsim/errors.hpp"

namespace mzsim {

namespace {

void check_dim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    throw InvalidInput("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw InvalidInput(os.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : ComplexMatrix(dim, std::span<const Complex>(row_major.begin(), row_major.size())) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::span<const Complex> row_major) : dim_(dim) {
  check_dim(dim);
  if (row_major.size() != dim * dim) {
    throw InvalidInput("expected " + std::to_string(dim * dim) + " entries, got " +
                       std::to_string(row_major.size()));
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < ket.size(); ++c) m(r, c) = ket[r] * std::conj(ket[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  check_same_dim(*this, rhs, "operator+");
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  check_same_dim(*this, rhs, "operator-");
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  check_same_dim(lhs, rhs, "operator*");
  const std::size_t d = lhs.dim();
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < d; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs) noexcept {
  if (lhs.dim_ != rhs.dim_) return false;
  return std::equal(lhs.entries().begin(), lhs.entries().end(), rhs.entries().begin());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw InvalidInput("max_abs_diff: size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b, "max_abs_diff");
  return max_abs_diff(a.entries(), b.entries());
}

Ket apply(const ComplexMatrix& m, std::span<const Complex> ket) {
  if (ket.size() != m.dim()) throw InvalidInput("apply: ket size does not match matrix");
  Ket out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out[r] += m(r, c) * ket[c];
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return max_abs_diff(m, m.adjoint()) <= tol;
}

double off_diagonal_magnitude(const ComplexMatrix& m) noexcept {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (r != c) worst = std::max(worst, std::abs(m(r, c)));
    }
  }
  return worst;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd h(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto ur = static_cast<std::size_t>(r);
      const auto uc = static_cast<std::size_t>(c);
      h(r, c) = 0.5 * (m(ur, uc) + std::conj(m(uc, ur)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

namespace {

Complex phase_of_first(std::span<const Complex> values, double threshold) {
  for (const Complex& v : values) {
    const double mag = std::abs(v);
    if (mag > threshold) return std::conj(v) / mag;
  }
  return 1.0;
}

}  // namespace

ComplexMatrix canonicalize_global_phase(const ComplexMatrix& m, double threshold) {
  return m * phase_of_first(m.entries(), threshold);
}

Ket canonicalize_global_phase(std::span<const Complex> ket, double threshold) {
  const Complex phase = phase_of_first(ket, threshold);
  Ket out(ket.begin(), ket.end());
  for (Complex& v : out) v *= phase;
  return out;
}

double diff_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_diff(canonicalize_global_phase(a), canonicalize_global_phase(b));
}

double diff_up_to_global_phase(std::span<const Complex> a, std::span<const Complex> b) {
  return max_abs_diff(canonicalize_global_phase(a), canonicalize_global_phase(b));
}

namespace pauli {
ComplexMatrix x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
ComplexMatrix z() { return ComplexMatrix::diagonal({1.0, -1.0}); }
}  // namespace pauli

ValidityReport validate_density(const ComplexMatrix& rho, DensityTolerance tol) {
  ValidityReport report;
  report.hermiticity_defect = max_abs_diff(rho, rho.adjoint());
  report.trace_defect = std::abs(rho.trace() - Complex(1.0));
  const auto ev = hermitian_eigenvalues(rho);
  report.min_eigenvalue = ev.front();
  report.passed = report.hermiticity_defect <= tol.structural &&
                  report.trace_defect <= tol.structural && report.min_eigenvalue >= -tol.spectral;
  return report;
}

ValidityReport validate_density(const ComplexMatrix& rho, double tol) {
  return validate_density(rho, DensityTolerance{tol, tol});
}

DensityOperator::DensityOperator(ComplexMatrix m, DensityTolerance tol) : m_(m) {
  const ValidityReport r = validate_density(m_, tol);
  if (r.passed) return;
  std::ostringstream os;
  os << "not a density operator:";
  if (r.hermiticity_defect > tol.structural) os << " hermiticity defect " << r.hermiticity_defect;
  if (r.trace_defect > tol.structural) os << " trace defect " << r.trace_defect;
  if (r.min_eigenvalue < -tol.spectral) os << " min eigenvalue " << r.min_eigenvalue;
  throw InvalidInput(os.str());
}

DensityOperator DensityOperator::pure(std::span<const Complex> ket) {
  double norm2 = 0.0;
  for (const Complex& v : ket) norm2 += std::norm(v);
  if (std::abs(norm2 - 1.0) > kStructuralTol) {
    throw InvalidInput("pure: ket is not normalized");
  }
  return DensityOperator(ComplexMatrix::projector(ket));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  return DensityOperator(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

GateMatrix::GateMatrix(ComplexMatrix m, double tol) : m_(m) {
  const double defect = max_abs_diff(m_.adjoint() * m_, ComplexMatrix::identity(m_.dim()));
  if (defect > tol) {
    std::ostringstream os;
    os << "not unitary: |U^dagger U - I|_max = " << defect;
    throw InvalidInput(os.str());
  }
}

GateMatrix GateMatrix::identity(std::size_t dim) { return GateMatrix(ComplexMatrix::identity(dim)); }

GateMatrix GateMatrix::adjoint() const { return GateMatrix(m_.adjoint()); }

GateMatrix operator*(const GateMatrix& lhs, const GateMatrix& rhs) {
  return GateMatrix(lhs.m_ * rhs.m_);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw InvalidInput("tensor: both factors must be 2x2");
  }
  ComplexMatrix out(4);
  for (std::size_t ar = 0; ar < 2; ++ar) {
    for (std::size_t ac = 0; ac < 2; ++ac) {
      for (std::size_t br = 0; br < 2; ++br) {
        for (std::size_t bc = 0; bc < 2; ++bc) out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
      }
    }
  }
  return out;
}

GateMatrix tensor(const GateMatrix& a, const GateMatrix& b) {
  return GateMatrix(tensor(a.matrix(), b.matrix()));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(tensor(a.matrix(), b.matrix()));
}

Ket tensor(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != 2 || b.size() != 2) throw InvalidInput("tensor: both kets must have 2 entries");
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

DensityOperator partial_trace_ancilla(const DensityOperator& rho) {
  if (rho.dim() != 4) {
    throw InvalidInput("partial_trace_ancilla: expected a 4x4 density operator, got " +
                       std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
  }
  ComplexMatrix out(2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t k = 0; k < 2; ++k) out(r, c) += rho(2 * r + k, 2 * c + k);
    }
  }
  return DensityOperator(out);
}

DensityOperator apply_unitary(const DensityOperator& rho, const GateMatrix& u) {
  if (rho.dim() != u.dim()) {
    throw InvalidInput("apply_unitary: density operator is " + std::to_string(rho.dim()) +
                       "-dimensional but gate is " + std::to_string(u.dim()) + "-dimensional");
  }
  const ComplexMatrix& um = u.matrix();
  ComplexMatrix out = um * rho.matrix() * um.adjoint();
  // Rounding can leave ~1e-17 anti-Hermitian residue; project it out.
  out = (out + out.adjoint()) * Complex(0.5);
  return DensityOperator(out);
}

double expectation(const DensityOperator& rho, const ComplexMatrix& obs) {
  if (obs.dim() != rho.dim()) throw InvalidInput("expectation: dimension mismatch");
  if (!is_hermitian(obs)) throw InvalidInput("expectation: observable is not Hermitian");
  const Complex value = (obs * rho.matrix()).trace();
  if (std::abs(value.imag()) > kStructuralTol) {
    throw std::logic_error("expectation: imaginary residual exceeds tolerance");
  }
  return value.real();
}

}  // namespace mzsim
