#pragma once

// Test-only reference constructions. Nothing here calls into the code paths
// it is used to check: states are written out component by component and
// random operators come from Eigen's QR, not from the gate library.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "mzsim/linalg.hpp"

namespace oracle {

using mzsim::Complex;
using mzsim::ComplexMatrix;
using mzsim::Ket;

inline constexpr double kPi = std::numbers::pi;

/// Kronecker product by the index formula (a x b)(i, j) = a(i/2, j/2) b(i%2, j%2).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = a(i / 2, j / 2) * b(i % 2, j % 2);
  }
  return out;
}

/// (|0> + e^{i phi}|1>)/sqrt2
inline Ket psi_p(double phi) {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s * Complex(std::cos(phi), std::sin(phi))};
}

/// cos(phi/2)|0> - i sin(phi/2)|1>
inline Ket psi_w(double phi) {
  return {std::cos(phi / 2.0), Complex(0.0, -std::sin(phi / 2.0))};
}

/// H|psi_p> written out: ((1 + e^{i phi})|0> + (1 - e^{i phi})|1>) / 2,
/// i.e. e^{i phi/2} |psi_w> with the phase that the circuit actually produces.
inline Ket hadamard_of_psi_p(double phi) {
  const Complex e(std::cos(phi), std::sin(phi));
  return {(1.0 + e) / 2.0, (1.0 - e) / 2.0};
}

/// cos(a)|psi_p>|0> + sin(a) H|psi_p>|1> in |target, ancilla> order.
inline Ket entangled_state(double alpha, double phi) {
  const Ket p = psi_p(phi);
  const Ket w = hadamard_of_psi_p(phi);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return {c * p[0], s * w[0], c * p[1], s * w[1]};
}

/// cos^2(a)|psi_p><psi_p| + sin^2(a)|psi_w><psi_w|
inline ComplexMatrix reduced_mixture(double alpha, double phi) {
  const Ket p = psi_p(phi);
  const Ket w = psi_w(phi);
  ComplexMatrix m(2);
  const double c2 = std::cos(alpha) * std::cos(alpha);
  const double s2 = std::sin(alpha) * std::sin(alpha);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t k = 0; k < 2; ++k) {
      m(r, k) = c2 * p[r] * std::conj(p[k]) + s2 * w[r] * std::conj(w[k]);
    }
  }
  return m;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(static_cast<std::size_t>(e.rows()));
  for (Eigen::Index r = 0; r < e.rows(); ++r) {
    for (Eigen::Index c = 0; c < e.cols(); ++c) {
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
    }
  }
  return m;
}

inline Eigen::MatrixXcd ginibre(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd g(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) g(r, c) = Complex(n(rng), n(rng));
  }
  return g;
}

/// Haar-ish unitary: Q from the QR factorization of a Ginibre matrix.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(g.rows(), g.cols());
  return from_eigen(q);
}

/// Full-rank random mixed state G G^dagger / tr.
inline ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return from_eigen(rho);
}

/// Random probability vector on dim outcomes.
inline std::vector<double> random_populations(std::size_t dim, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(dim);
  double total = 0.0;
  for (double& x : p) total += (x = e(rng));
  for (double& x : p) x /= total;
  return p;
}

inline ComplexMatrix diag(const std::vector<double>& p) {
  ComplexMatrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
  return m;
}

}  // namespace oracle
