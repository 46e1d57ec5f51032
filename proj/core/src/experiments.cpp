#include "mzsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "mzsim/errors.hpp"
#include "mzsim/gates.hpp"
#include "mzsim/pulse_sequence.hpp"

namespace mzsim {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double x) { return x * x; }

// Detector intensities of one single-qubit branch (open or closed).
struct BranchOutcome {
  double s0 = 0.0;
  double s1 = 0.0;
  std::optional<SpectrumLines> target_lines;
};

BranchOutcome ideal_branch(double phi, const ExperimentConfig& cfg, bool closed) {
  const DensityOperator initial = pseudopure_state(1, cfg.purity, 0);
  DensityOperator rho = apply_unitary(initial, hadamard());
  rho = apply_unitary(rho, phase_gate(phi));
  if (closed) rho = apply_unitary(rho, hadamard());
  if (cfg.noise_p > 0.0) rho = depolarize(rho, cfg.noise_p);
  rho = pfg_dephase(rho);

  // S = 1/2 + c with c scaled so that the reference state reads c = 1/2.
  const double c_ref = extract_single_qubit_coeff(initial);
  const double d0 = expectation(rho, ComplexMatrix::diagonal({1.0, 0.0}));
  const double d1 = expectation(rho, ComplexMatrix::diagonal({0.0, 1.0}));
  BranchOutcome out;
  out.s0 = 0.5 + 0.5 * (d0 - 0.5) / c_ref;
  out.s1 = 0.5 + 0.5 * (d1 - 0.5) / c_ref;
  return out;
}

// 1H target starts from thermal equilibrium, 13C partner is left unpolarized.
BranchOutcome pulse_branch(double phi, const ExperimentConfig& cfg, bool closed) {
  const DensityOperator equilibrium =
      tensor(thermal_state(cfg.sys.epsilon), DensityOperator::maximally_mixed(2));
  const ShapedGate h_target{embed(hadamard(), Qubit::target), "H"};

  PulseSequence seq{h_target};
  for (PulseEvent& e : echo_sequence(cfg.sys, phi)) seq.push_back(std::move(e));
  if (closed) seq.push_back(h_target);

  DensityOperator rho = run_sequence(equilibrium, seq, cfg.sys);
  if (cfg.noise_p > 0.0) rho = depolarize(rho, cfg.noise_p);
  rho = pfg_dephase(rho);

  BranchOutcome out;
  out.target_lines =
      read_spectrum(rho, Qubit::target, reference_normalization(equilibrium, Qubit::target));
  out.s0 = target_marginal_population(*out.target_lines);
  out.s1 = 1.0 - out.s0;
  return out;
}

BranchOutcome run_branch(double phi, const ExperimentConfig& cfg, bool closed) {
  return cfg.mode == Mode::ideal_gate ? ideal_branch(phi, cfg, closed)
                                      : pulse_branch(phi, cfg, closed);
}

SweepPoint single_qubit_point(double phi, const ExperimentConfig& cfg, bool closed) {
  const BranchOutcome b = run_branch(phi, cfg, closed);
  SweepPoint p;
  p.phi = phi;
  p.s0 = b.s0;
  p.s1 = b.s1;
  p.target_lines = b.target_lines;
  p.theory_s0 = theory_intensity(closed ? Variant::closed : Variant::open, 0.0, phi);
  return p;
}

// (1 - purity) I/2 + purity [cos^2 a |psi_p><psi_p| + sin^2 a |psi_w><psi_w|]
ComplexMatrix expected_reduced_state(double alpha, double phi, double purity) {
  const double s = (std::numbers::sqrt2 / 2.0);
  const Ket psi_p{s, std::polar(s, phi)};
  const Ket psi_w{std::cos(phi / 2.0), Complex(0.0, -std::sin(phi / 2.0))};
  ComplexMatrix mix = ComplexMatrix::projector(psi_p) * Complex(sq(std::cos(alpha))) +
                      ComplexMatrix::projector(psi_w) * Complex(sq(std::sin(alpha)));
  return mix * Complex(purity) + ComplexMatrix::identity(2) * Complex((1.0 - purity) / 2.0);
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::open: return "open";
    case Variant::closed: return "closed";
    case Variant::wheeler: return "wheeler";
    case Variant::quantum_delayed: return "quantum-delayed";
  }
  return "?";
}

std::string_view to_string(Mode m) {
  return m == Mode::ideal_gate ? "ideal" : "pulse";
}

std::vector<double> phi_grid(std::size_t n) {
  if (n == 0) throw InvalidInput("phi_grid: need at least one point");
  if (n == 1) return {0.0};
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return grid;
}

std::vector<double> default_phi_grid() { return phi_grid(21); }

std::vector<double> default_alpha_grid() {
  return {0.0, kPi / 8.0, kPi / 4.0, 3.0 * kPi / 8.0, kPi / 2.0};
}

void validate(const ExperimentConfig& cfg) {
  validate(cfg.sys);
  if (cfg.phis.empty()) throw InvalidInput("config: phis must not be empty");
  for (double phi : cfg.phis) {
    if (!std::isfinite(phi)) throw InvalidInput("config: every phi must be finite");
    if (cfg.mode == Mode::pulse_sequence && phi < 0.0) {
      throw InvalidInput("config: pulse mode needs non-negative phi (delay cannot run backwards)");
    }
  }
  if (!(cfg.noise_p >= 0.0 && cfg.noise_p <= 1.0)) {
    throw InvalidInput("config: noise_p must lie in [0, 1]");
  }
  if (!(cfg.purity > 0.0 && cfg.purity <= 1.0)) {
    throw InvalidInput("config: purity must lie in (0, 1]");
  }
  const bool needs_alphas = cfg.variant == Variant::quantum_delayed;
  if (needs_alphas && cfg.alphas.empty()) {
    throw InvalidInput("config: quantum_delayed needs at least one alpha");
  }
  if (!needs_alphas && !cfg.alphas.empty()) {
    throw InvalidInput("config: alphas are only meaningful for quantum_delayed");
  }
  for (double a : cfg.alphas) {
    if (!std::isfinite(a)) throw InvalidInput("config: every alpha must be finite");
  }
  if (cfg.variant == Variant::wheeler && cfg.shots == 0) {
    throw InvalidInput("config: wheeler needs at least one shot");
  }
}

double theory_s0(double alpha, double phi) {
  return 0.5 * sq(std::cos(alpha)) + sq(std::cos(phi / 2.0)) * sq(std::sin(alpha));
}

double theory_intensity(Variant variant, double alpha, double phi) {
  switch (variant) {
    case Variant::open: return 0.5;
    case Variant::closed: return sq(std::cos(phi / 2.0));
    case Variant::wheeler: return 0.5 * (0.5 + sq(std::cos(phi / 2.0)));
    case Variant::quantum_delayed: return theory_s0(alpha, phi);
  }
  return 0.0;
}

double theory_visibility(Variant variant, double alpha) {
  switch (variant) {
    case Variant::open: return 0.0;
    case Variant::closed: return 1.0;
    case Variant::wheeler: return 0.5;
    case Variant::quantum_delayed: return sq(std::sin(alpha));
  }
  return 0.0;
}

SweepPoint run_open(double phi, const ExperimentConfig& cfg) {
  return single_qubit_point(phi, cfg, false);
}

SweepPoint run_closed(double phi, const ExperimentConfig& cfg) {
  return single_qubit_point(phi, cfg, true);
}

SweepPoint run_wheeler(double phi, const ExperimentConfig& cfg, std::uint64_t n_shots,
                       const std::function<bool()>& choose_closed) {
  if (n_shots == 0) throw InvalidInput("run_wheeler: n_shots must be at least 1");
  // Both branches share the state after H and the phase shifter; only the
  // late choice differs, so each branch is evaluated once.
  const BranchOutcome open = run_branch(phi, cfg, false);
  const BranchOutcome closed = run_branch(phi, cfg, true);

  std::uint64_t n_closed = 0;
  for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
    if (choose_closed()) ++n_closed;
  }
  const double f_closed = static_cast<double>(n_closed) / static_cast<double>(n_shots);
  const double f_open = 1.0 - f_closed;

  SweepPoint p;
  p.phi = phi;
  p.s0 = f_open * open.s0 + f_closed * closed.s0;
  p.s1 = f_open * open.s1 + f_closed * closed.s1;
  p.theory_s0 = theory_intensity(Variant::wheeler, 0.0, phi);
  if (open.target_lines && closed.target_lines) {
    SpectrumLines mixed = *closed.target_lines;
    mixed.line_low = f_open * open.target_lines->line_low + f_closed * closed.target_lines->line_low;
    mixed.line_high =
        f_open * open.target_lines->line_high + f_closed * closed.target_lines->line_high;
    p.target_lines = mixed;
  }
  return p;
}

SweepPoint run_wheeler(double phi, const ExperimentConfig& cfg, std::uint64_t n_shots,
                       std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed),
                    static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  return run_wheeler(phi, cfg, n_shots, [&rng] { return (rng() >> 63) != 0; });
}

SweepPoint run_quantum_delayed(double alpha, double phi, const ExperimentConfig& cfg) {
  if (!std::isfinite(alpha) || !std::isfinite(phi)) {
    throw InvalidInput("run_quantum_delayed: alpha and phi must be finite");
  }
  const DensityOperator pps = pseudopure_state(2, cfg.purity, 0);
  const GateMatrix prep_ancilla = embed(y_rotation(alpha), Qubit::ancilla);
  const GateMatrix h_target = embed(hadamard(), Qubit::target);

  DensityOperator rho = pps;
  double reduced_tol = kStructuralTol;
  if (cfg.mode == Mode::ideal_gate) {
    rho = apply_unitary(rho, prep_ancilla);
    rho = apply_unitary(rho, h_target);
    rho = apply_unitary(rho, embed(phase_gate(phi), Qubit::target));
    rho = apply_unitary(rho, controlled_hadamard());
  } else {
    PulseSequence seq{ShapedGate{prep_ancilla, "Y_alpha"}, ShapedGate{h_target, "H"}};
    for (PulseEvent& e : echo_sequence(cfg.sys, phi)) seq.push_back(std::move(e));
    seq.push_back(ShapedGate{controlled_hadamard(), "cH"});
    rho = run_sequence(rho, seq, cfg.sys);
    reduced_tol = 1e-9;
  }

  SweepPoint p;
  p.alpha = alpha;
  p.phi = phi;
  p.theory_s0 = theory_s0(alpha, phi);

  const double reduced_err =
      max_abs_diff(partial_trace_ancilla(rho).matrix(), expected_reduced_state(alpha, phi, cfg.purity));
  p.reduced_state_error = reduced_err;
  if (reduced_err > reduced_tol) {
    std::ostringstream os;
    os << "reduced target state deviates from the expected mixture by " << reduced_err;
    throw VerificationFailure(os.str());
  }

  if (cfg.noise_p > 0.0) rho = depolarize(rho, cfg.noise_p);
  rho = pfg_dephase(rho);

  const SpectrumLines t =
      read_spectrum(rho, Qubit::target, reference_normalization(pps, Qubit::target));
  const SpectrumLines a =
      read_spectrum(rho, Qubit::ancilla, reference_normalization(pps, Qubit::ancilla));
  const double tol = cfg.noise_p > 0.0 ? kReadoutTolNoisy : kReadoutTolNoiseless;
  p.population_00 = reconstruct_population(t, a, tol);
  p.s0 = target_marginal_population(t);
  p.s1 = 1.0 - p.s0;
  p.target_lines = t;
  p.ancilla_lines = a;
  return p;
}

double visibility(std::span<const CurveSample> curve) {
  if (curve.empty()) throw InvalidInput("visibility: empty curve");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const CurveSample& c : curve) {
    if (!(c.s >= -kReadoutResidue)) throw InvalidInput("visibility: intensities must be non-negative");
    // Residue around a true zero; thermal-state readout divides by a ~1e-5 deviation.
    const double s = std::max(c.s, 0.0);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (hi + lo == 0.0) throw UndefinedVisibility("visibility: curve is identically zero");
  return (hi - lo) / (hi + lo);
}

}  // namespace mzsim
