#pragma once

// The four interferometer experiments: open, closed, Wheeler (random second
// beam splitter) and quantum delayed choice (beam splitter controlled by an
// ancilla in cos(alpha)|0> + sin(alpha)|1>). Each runs either as ideal gates
// or as an NMR pulse sequence with an echo-based phase shifter.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mzsim/linalg.hpp"
#include "mzsim/nmr.hpp"

namespace mzsim {

enum class Variant { open, closed, wheeler, quantum_delayed };
enum class Mode { ideal_gate, pulse_sequence };

std::string_view to_string(Variant v);
std::string_view to_string(Mode m);

/// n equally spaced angles over [0, 2pi], both endpoints included.
std::vector<double> phi_grid(std::size_t n);
/// 21 points, the phase sweep used throughout.
std::vector<double> default_phi_grid();
/// {0, pi/8, pi/4, 3pi/8, pi/2}.
std::vector<double> default_alpha_grid();

struct ExperimentConfig {
  Variant variant = Variant::closed;
  Mode mode = Mode::ideal_gate;
  std::vector<double> alphas;  // quantum_delayed only
  std::vector<double> phis = default_phi_grid();
  double noise_p = 0.0;
  double purity = 1.0;  // pseudopure residual purity
  SpinSystem sys;
  std::uint64_t rng_seed = 0;  // wheeler only
  std::uint64_t shots = 1000;  // wheeler only

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws InvalidInput describing the first violated constraint.
void validate(const ExperimentConfig& cfg);

struct SweepPoint {
  std::optional<double> alpha;  // set for quantum_delayed
  double phi = 0.0;
  double s0 = 0.0;  // detector D0 intensity
  double s1 = 0.0;  // detector D1 intensity
  double theory_s0 = 0.0;
  std::optional<SpectrumLines> target_lines;
  std::optional<SpectrumLines> ancilla_lines;
  std::optional<double> population_00;        // reconstructed |00> population
  std::optional<double> reduced_state_error;  // max deviation of rho_T from the mixture of |psi_p>, |psi_w>
};

/// Closed-form D0 intensity 1/2 cos^2(alpha) + cos^2(phi/2) sin^2(alpha).
double theory_s0(double alpha, double phi);
/// Noiseless D0 intensity for any variant; `alpha` is ignored unless quantum_delayed.
double theory_intensity(Variant variant, double alpha, double phi);
/// Noiseless visibility: 0 open, 1 closed, 1/2 wheeler, sin^2(alpha) quantum_delayed.
double theory_visibility(Variant variant, double alpha);

SweepPoint run_open(double phi, const ExperimentConfig& cfg);
SweepPoint run_closed(double phi, const ExperimentConfig& cfg);

/// Per shot, after the first Hadamard and phase shift, `choose_closed`
/// decides whether the second Hadamard is inserted. s0/s1 are shot averages
/// of the selected branch intensities.
SweepPoint run_wheeler(double phi, const ExperimentConfig& cfg, std::uint64_t n_shots,
                       const std::function<bool()>& choose_closed);
/// Fair coin from a 64-bit Mersenne twister seeded by (cfg.rng_seed, stream).
SweepPoint run_wheeler(double phi, const ExperimentConfig& cfg, std::uint64_t n_shots,
                       std::uint64_t stream = 0);

/// Pseudopure |00> -> Y_alpha(ancilla) -> H(target) -> phase -> cH ->
/// [depolarize] -> gradient -> (pi/2)_y readout of both spins.
///
/// s0 is the target-marginal population from the target spectrum;
/// population_00 is the |00> population reconstructed from both spectra.
/// Before dephasing the reduced target state is compared with the expected
/// mixture; a mismatch throws VerificationFailure.
SweepPoint run_quantum_delayed(double alpha, double phi, const ExperimentConfig& cfg);

struct CurveSample {
  double phi = 0.0;
  double s = 0.0;
};

/// Largest negative intensity treated as zero by `visibility`.
inline constexpr double kReadoutResidue = 1e-9;

/// (max - min) / (max + min) over the samples, no interpolation.
/// Throws InvalidInput for an empty curve or intensity below -kReadoutResidue and
/// UndefinedVisibility when max + min is zero.
double visibility(std::span<const CurveSample> curve);

struct VisibilityEntry {
  std::optional<double> alpha;
  double visibility = 0.0;
  double theory = 0.0;
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<SweepPoint> points;  // alpha-major, then phi
  std::vector<VisibilityEntry> visibility_by_alpha;
  double max_abs_error_vs_theory = 0.0;
};

}  // namespace mzsim
