#pragma once

// NMR layer: equilibrium and pseudopure states, free precession under
// resonance offsets and scalar coupling, gradient dephasing, a depolarizing
// noise channel, and the (pi/2)_y spectral readout of diagonal states.

#include "mzsim/gates.hpp"
#include "mzsim/linalg.hpp"

namespace mzsim {

/// Two-spin system in the rotating frame. Frequencies in Hz.
struct SpinSystem {
  double offset_target = 100.0;  // 1H resonance offset; drives the interferometer phase
  double offset_ancilla = 0.0;   // 13C on resonance
  double j_coupling = 209.0;
  double epsilon = 1e-5;         // thermal polarization gamma*hbar*B0/kT

  friend bool operator==(const SpinSystem&, const SpinSystem&) = default;
};

/// Throws InvalidInput unless j_coupling > 0, 0 < epsilon < 1 and all values finite.
void validate(const SpinSystem& sys);

/// Coefficients of rho = I/4 + c1 Z(x)I + c2 I(x)Z + c3 Z(x)Z.
struct DiagonalCoefficients {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Readout-chain tolerance on |c3(target) - c3(ancilla)|.
inline constexpr double kReadoutTolNoiseless = 1e-10;
inline constexpr double kReadoutTolNoisy = 0.05;

/// The two transitions of one spin after a (pi/2)_y detection pulse.
///
/// `line_low` is the transition with the partner spin in |0>, `line_high`
/// with the partner in |1>. Amplitudes are raw (in units of the deviation
/// coefficients); `normalization` is the summed line signal of the reference
/// detection on the same spin. A pure |0...0> reference has normalization 1/2,
/// so scaled amplitudes are line * 0.5 / normalization.
struct SpectrumLines {
  Qubit qubit = Qubit::target;
  double line_low = 0.0;
  double line_high = 0.0;
  double normalization = 0.5;

  double scaled_low() const { return line_low * 0.5 / normalization; }
  double scaled_high() const { return line_high * 0.5 / normalization; }
};

/// Boltzmann state (e^{eps/2}|0><0| + e^{-eps/2}|1><1|) / (2 cosh(eps/2)).
DensityOperator thermal_state(double epsilon);

/// (1 - purity)/d I + purity |k><k| with d = 2^n_qubits.
DensityOperator pseudopure_state(int n_qubits, double purity, std::size_t target_ket = 0);

/// Closed-form diagonal propagator exp(-i H tau) with
/// H = 2pi f_t Z(x)I/2 + 2pi f_a I(x)Z/2 + [2pi J Z(x)Z/4].
GateMatrix free_evolution_propagator(const SpinSystem& sys, double tau, bool j_active);
DensityOperator free_evolution(const DensityOperator& rho, const SpinSystem& sys, double tau,
                               bool j_active);

/// Zeroes every coherence; populations are kept bit-for-bit.
DensityOperator pfg_dephase(const DensityOperator& rho);

/// (1 - p) rho + p I/d.
DensityOperator depolarize(const DensityOperator& rho, double p);

/// Unique (c1, c2, c3) for a diagonal 4x4 state. Throws InvalidInput if the
/// largest coherence exceeds kStructuralTol.
DiagonalCoefficients extract_diag_coeffs(const DensityOperator& rho_diag);
/// Single-qubit c from rho = I/2 + c Z.
double extract_single_qubit_coeff(const DensityOperator& rho_diag);
/// Inverse of extract_diag_coeffs; validates the result.
DensityOperator rebuild_diagonal(const DiagonalCoefficients& c);

/// Applies (pi/2)_y to `qubit` and records the transverse signal of its two
/// transitions: target gives (c1 + c3, c1 - c3), ancilla (c2 + c3, c2 - c3).
SpectrumLines read_spectrum(const DensityOperator& rho_diag, Qubit qubit,
                            double normalization = 0.5);

/// Summed line signal of `reference` on `qubit`; feed into read_spectrum.
double reference_normalization(const DensityOperator& reference, Qubit qubit);

/// |00> population 1/4 + c1 + c2 + c3 from both spectra. The shared c3 is
/// read twice; a disagreement above `tol` throws InconsistentReadout.
double reconstruct_population(const SpectrumLines& target_lines, const SpectrumLines& ancilla_lines,
                              double tol = kReadoutTolNoiseless);

/// Target-marginal population <0|rho_T|0> = 1/2 + 2 c1, from the target lines alone.
double target_marginal_population(const SpectrumLines& target_lines);

}  // namespace mzsim
