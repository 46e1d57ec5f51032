// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "mzsim/experiments.hpp"
#include "mzsim/gates.hpp"
#include "mzsim/nmr.hpp"
#include "mzsim/sweep.hpp"
#include "oracles.hpp"

using namespace mzsim;
using oracle::kPi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

ExperimentConfig quantum_delayed_config(Mode mode) {
  ExperimentConfig cfg;
  cfg.variant = Variant::quantum_delayed;
  cfg.mode = mode;
  cfg.alphas = default_alpha_grid();
  return cfg;
}

// 1. Ideal sweep tracks the closed form over the 5 x 21 grid, fast.
Outcome intensity_matches_theory() {
  const auto t0 = std::chrono::steady_clock::now();
  const SweepResult r = sweep(quantum_delayed_config(Mode::ideal_gate));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double worst = 0.0;
  for (const SweepPoint& p : r.points) worst = std::max(worst, std::abs(p.s0 - theory_s0(*p.alpha, p.phi)));
  return {worst <= 1e-10 && secs < 1.0, fmt("max |s0 - theory| = %.3g, runtime %.3f s", worst, secs)};
}

// 2. Visibility of each curve equals sin^2(alpha).
Outcome visibility_is_sin_squared() {
  const SweepResult r = sweep(quantum_delayed_config(Mode::ideal_gate));
  double worst = 0.0;
  for (const VisibilityEntry& v : r.visibility_by_alpha) {
    worst = std::max(worst, std::abs(v.visibility - std::pow(std::sin(*v.alpha), 2)));
  }
  return {worst <= 1e-9 && r.visibility_by_alpha.size() == 5, fmt("max |nu - sin^2 alpha| = %.3g", worst)};
}

// 3. Classical limits: open is flat at 1/2, closed follows cos^2(phi/2).
Outcome classical_limits() {
  ExperimentConfig cfg;
  double worst = 0.0;
  for (double phi : default_phi_grid()) {
    cfg.variant = Variant::open;
    worst = std::max(worst, std::abs(run_open(phi, cfg).s0 - 0.5));
    cfg.variant = Variant::closed;
    worst = std::max(worst, std::abs(run_closed(phi, cfg).s0 - std::pow(std::cos(phi / 2.0), 2)));
  }
  return {worst <= 1e-12, fmt("max deviation = %.3g", worst)};
}

// 4. Depolarizing noise p scales the closed-interferometer visibility to 1 - p.
Outcome noise_degrades_visibility() {
  ExperimentConfig cfg;
  cfg.variant = Variant::closed;
  cfg.noise_p = 0.03;
  const double nu = sweep(cfg).visibility_by_alpha.front().visibility;
  return {std::abs(nu - 0.97) <= 1e-9, fmt("nu = %.12f (expected 0.97)", nu)};
}

// 5. Pulse-sequence mode agrees with ideal gates at every grid point.
Outcome pulse_matches_ideal() {
  const SweepResult ideal = sweep(quantum_delayed_config(Mode::ideal_gate));
  const SweepResult pulse = sweep(quantum_delayed_config(Mode::pulse_sequence));
  double worst = 0.0;
  for (std::size_t i = 0; i < ideal.points.size(); ++i) {
    worst = std::max(worst, std::abs(ideal.points[i].s0 - pulse.points[i].s0));
  }
  return {worst <= 1e-8, fmt("max |pulse - ideal| = %.3g over %.0f points", worst,
                             static_cast<double>(ideal.points.size()))};
}

// 6. Spectral reconstruction recovers the |00> population of random diagonal states.
Outcome reconstruction_is_exact() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto pops = oracle::random_populations(4, rng);
    const DensityOperator rho(oracle::diag(pops));
    const double got = reconstruct_population(read_spectrum(rho, Qubit::target), read_spectrum(rho, Qubit::ancilla));
    worst = std::max(worst, std::abs(got - pops[0]));
  }
  return {worst <= 1e-10, fmt("max |reconstructed - <00|rho|00>| = %.3g", worst)};
}

// 7. Random pipelines stay physical; the reduced target state is the expected mixture.
Outcome invariants_hold() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    DensityOperator rho(oracle::random_density(4, rng));
    const std::vector<GateMatrix> gates{
        embed(hadamard(), Qubit::target), embed(phase_gate(angle(rng)), Qubit::target),
        embed(y_rotation(angle(rng)), Qubit::ancilla), controlled_hadamard(),
        rf_pulse(angle(rng), Axis::x, Qubit::ancilla), GateMatrix(oracle::random_unitary(4, rng))};
    for (const GateMatrix& g : gates) rho = apply_unitary(rho, g);
    rho = depolarize(rho, unit(rng));
    if (unit(rng) < 0.5) rho = pfg_dephase(rho);
    const ValidityReport full = validate_density(rho.matrix());
    const ValidityReport reduced = validate_density(partial_trace_ancilla(rho).matrix());
    if (!full.passed || !reduced.passed) ++violations;
  }
  double worst = 0.0;
  const ExperimentConfig cfg = quantum_delayed_config(Mode::ideal_gate);
  for (double alpha : cfg.alphas) {
    for (double phi : cfg.phis) worst = std::max(worst, *run_quantum_delayed(alpha, phi, cfg).reduced_state_error);
  }
  return {violations == 0 && worst <= 1e-12,
          fmt("%.0f invalid states in 1000 pipelines, max reduced-state error %.3g", violations, worst)};
}

// 8. Wheeler statistics at phi = 0 and fixed-seed reproducibility.
Outcome wheeler_statistics() {
  ExperimentConfig cfg;
  cfg.variant = Variant::wheeler;
  cfg.rng_seed = 12345;
  const std::uint64_t n = 100000;
  const double s0 = run_wheeler(0.0, cfg, n).s0;
  const double sigma = 0.25 / std::sqrt(static_cast<double>(n));
  const bool within = std::abs(s0 - 0.75) <= 3.0 * sigma;

  cfg.shots = 1000;
  auto csv = [&] {
    std::ostringstream os;
    cli::emit_sweep_csv(sweep(cfg), os);
    return os.str();
  };
  const bool identical = csv() == csv();
  return {within && identical, fmt("s0 = %.6f, |s0 - 0.75| / sigma = %.2f", s0, std::abs(s0 - 0.75) / sigma) +
                                   (identical ? ", CSV byte-identical" : ", CSV differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"intensity matches closed form on 5x21 grid", intensity_matches_theory},
      {"visibility equals sin^2(alpha)", visibility_is_sin_squared},
      {"open and closed classical limits", classical_limits},
      {"depolarizing noise p=0.03 gives visibility 0.97", noise_degrades_visibility},
      {"pulse sequence reproduces ideal gates", pulse_matches_ideal},
      {"spectral population reconstruction", reconstruction_is_exact},
      {"density-operator invariants and reduced state", invariants_hold},
      {"wheeler coin statistics and determinism", wheeler_statistics},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
