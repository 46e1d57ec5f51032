#include "mzsim/nmr.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "mzsim/errors.hpp"

namespace mzsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_diagonal(const DensityOperator& rho, const char* what) {
  const double off = off_diagonal_magnitude(rho.matrix());
  if (off > kStructuralTol) {
    std::ostringstream os;
    os << what << ": input is not diagonal (max coherence " << off << ")";
    throw InvalidInput(os.str());
  }
}

double pop(const DensityOperator& rho, std::size_t i) { return rho(i, i).real(); }

}  // namespace

void validate(const SpinSystem& sys) {
  if (!std::isfinite(sys.offset_target) || !std::isfinite(sys.offset_ancilla)) {
    throw InvalidInput("spin system: offsets must be finite");
  }
  if (!(sys.j_coupling > 0.0) || !std::isfinite(sys.j_coupling)) {
    throw InvalidInput("spin system: j_coupling must be positive");
  }
  if (!(sys.epsilon > 0.0 && sys.epsilon < 1.0)) {
    throw InvalidInput("spin system: epsilon must lie in (0, 1)");
  }
}

DensityOperator thermal_state(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidInput("thermal_state: epsilon must lie in (0, 1)");
  }
  // e^{+-eps/2} / (2 cosh(eps/2)) = (1 +- tanh(eps/2)) / 2
  const double t = std::tanh(epsilon / 2.0);
  return DensityOperator(ComplexMatrix::diagonal({0.5 * (1.0 + t), 0.5 * (1.0 - t)}));
}

DensityOperator pseudopure_state(int n_qubits, double purity, std::size_t target_ket) {
  if (n_qubits != 1 && n_qubits != 2) throw InvalidInput("pseudopure_state: n_qubits must be 1 or 2");
  if (!(purity > 0.0 && purity <= 1.0)) {
    throw InvalidInput("pseudopure_state: purity must lie in (0, 1]");
  }
  const std::size_t d = std::size_t{1} << n_qubits;
  if (target_ket >= d) throw InvalidInput("pseudopure_state: basis index out of range");
  ComplexMatrix m = ComplexMatrix::identity(d) * Complex((1.0 - purity) / static_cast<double>(d));
  m(target_ket, target_ket) += purity;
  return DensityOperator(m);
}

GateMatrix free_evolution_propagator(const SpinSystem& sys, double tau, bool j_active) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw InvalidInput("free_evolution: tau must be a non-negative finite duration");
  }
  ComplexMatrix u(4);
  for (std::size_t t = 0; t < 2; ++t) {
    for (std::size_t a = 0; a < 2; ++a) {
      const double zt = t == 0 ? 1.0 : -1.0;
      const double za = a == 0 ? 1.0 : -1.0;
      double energy = kTwoPi * sys.offset_target * zt / 2.0 + kTwoPi * sys.offset_ancilla * za / 2.0;
      if (j_active) energy += kTwoPi * sys.j_coupling * zt * za / 4.0;
      const std::size_t i = 2 * t + a;
      u(i, i) = std::polar(1.0, -energy * tau);
    }
  }
  return GateMatrix(u);
}

DensityOperator free_evolution(const DensityOperator& rho, const SpinSystem& sys, double tau,
                               bool j_active) {
  if (rho.dim() != 4) throw InvalidInput("free_evolution: expected a two-qubit state");
  return apply_unitary(rho, free_evolution_propagator(sys, tau, j_active));
}

DensityOperator pfg_dephase(const DensityOperator& rho) {
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) out(i, i) = rho(i, i);
  return DensityOperator(out);
}

DensityOperator depolarize(const DensityOperator& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("depolarize: p must lie in [0, 1]");
  const double d = static_cast<double>(rho.dim());
  ComplexMatrix out = rho.matrix() * Complex(1.0 - p);
  out += ComplexMatrix::identity(rho.dim()) * Complex(p / d);
  return DensityOperator(out);
}

DiagonalCoefficients extract_diag_coeffs(const DensityOperator& rho_diag) {
  if (rho_diag.dim() != 4) throw InvalidInput("extract_diag_coeffs: expected a two-qubit state");
  require_diagonal(rho_diag, "extract_diag_coeffs");
  const double p00 = pop(rho_diag, 0);
  const double p01 = pop(rho_diag, 1);
  const double p10 = pop(rho_diag, 2);
  const double p11 = pop(rho_diag, 3);
  // c_k = tr(P_k rho) / 4 with P_k in {Z(x)I, I(x)Z, Z(x)Z}
  return {
      (p00 + p01 - p10 - p11) / 4.0,
      (p00 - p01 + p10 - p11) / 4.0,
      (p00 - p01 - p10 + p11) / 4.0,
  };
}

double extract_single_qubit_coeff(const DensityOperator& rho_diag) {
  if (rho_diag.dim() != 2) throw InvalidInput("extract_single_qubit_coeff: expected a one-qubit state");
  require_diagonal(rho_diag, "extract_single_qubit_coeff");
  return (pop(rho_diag, 0) - pop(rho_diag, 1)) / 2.0;
}

DensityOperator rebuild_diagonal(const DiagonalCoefficients& c) {
  return DensityOperator(ComplexMatrix::diagonal({
      0.25 + c.c1 + c.c2 + c.c3,
      0.25 + c.c1 - c.c2 - c.c3,
      0.25 - c.c1 + c.c2 - c.c3,
      0.25 - c.c1 - c.c2 + c.c3,
  }));
}

SpectrumLines read_spectrum(const DensityOperator& rho_diag, Qubit qubit, double normalization) {
  if (rho_diag.dim() != 4) throw InvalidInput("read_spectrum: expected a two-qubit state");
  require_diagonal(rho_diag, "read_spectrum");
  if (!(normalization > 0.0) || !std::isfinite(normalization)) {
    throw InvalidInput("read_spectrum: normalization must be positive");
  }
  const DensityOperator detected =
      apply_unitary(rho_diag, rf_pulse(std::numbers::pi / 2.0, Axis::y, qubit));

  // Transverse magnetization of the observed spin, split by the partner's state.
  const ComplexMatrix up = ComplexMatrix::diagonal({1.0, 0.0});
  const ComplexMatrix down = ComplexMatrix::diagonal({0.0, 1.0});
  const ComplexMatrix sx = pauli::x();
  const bool on_target = qubit == Qubit::target;
  const ComplexMatrix obs_low = on_target ? tensor(sx, up) : tensor(up, sx);
  const ComplexMatrix obs_high = on_target ? tensor(sx, down) : tensor(down, sx);

  SpectrumLines lines;
  lines.qubit = qubit;
  lines.line_low = expectation(detected, obs_low) / 2.0;
  lines.line_high = expectation(detected, obs_high) / 2.0;
  lines.normalization = normalization;
  return lines;
}

double reference_normalization(const DensityOperator& reference, Qubit qubit) {
  const SpectrumLines ref = read_spectrum(pfg_dephase(reference), qubit);
  const double total = ref.line_low + ref.line_high;
  if (!(total > 0.0)) {
    throw InvalidInput("reference_normalization: reference state gives no positive signal");
  }
  return total;
}

double reconstruct_population(const SpectrumLines& target_lines, const SpectrumLines& ancilla_lines,
                              double tol) {
  if (target_lines.qubit != Qubit::target || ancilla_lines.qubit != Qubit::ancilla) {
    throw InvalidInput("reconstruct_population: expected (target, ancilla) spectra");
  }
  const double tl = target_lines.scaled_low();
  const double th = target_lines.scaled_high();
  const double al = ancilla_lines.scaled_low();
  const double ah = ancilla_lines.scaled_high();

  const double c1 = (tl + th) / 2.0;
  const double c3_target = (tl - th) / 2.0;
  const double c2 = (al + ah) / 2.0;
  const double c3_ancilla = (al - ah) / 2.0;
  if (std::abs(c3_target - c3_ancilla) > tol) {
    std::ostringstream os;
    os << "reconstruct_population: c3 from target lines (" << c3_target
       << ") disagrees with c3 from ancilla lines (" << c3_ancilla << ")";
    throw InconsistentReadout(os.str());
  }
  return 0.25 + c1 + c2 + c3_target;
}

double target_marginal_population(const SpectrumLines& target_lines) {
  if (target_lines.qubit != Qubit::target) {
    throw InvalidInput("target_marginal_population: expected target spectrum");
  }
  return 0.5 + target_lines.scaled_low() + target_lines.scaled_high();
}

}  // namespace mzsim
