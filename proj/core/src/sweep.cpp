#include "mzsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace mzsim {

namespace {

std::string describe(const std::vector<PointFailure>& failures) {
  std::ostringstream os;
  os << failures.size() << " sweep point(s) failed";
  const PointFailure& first = failures.front();
  os << "; first at ";
  if (first.alpha) os << "alpha=" << *first.alpha << ", ";
  os << "phi=" << first.phi << ": " << first.message;
  return os.str();
}

struct GridCell {
  std::optional<double> alpha;
  double phi = 0.0;
  std::size_t phi_index = 0;
};

SweepPoint evaluate(const GridCell& cell, const ExperimentConfig& cfg) {
  switch (cfg.variant) {
    case Variant::open: return run_open(cell.phi, cfg);
    case Variant::closed: return run_closed(cell.phi, cfg);
    case Variant::wheeler: return run_wheeler(cell.phi, cfg, cfg.shots, cell.phi_index);
    case Variant::quantum_delayed: return run_quantum_delayed(*cell.alpha, cell.phi, cfg);
  }
  return {};
}

}  // namespace

SweepError::SweepError(std::vector<PointFailure> failures)
    : std::runtime_error(describe(failures)), failures_(std::move(failures)) {}

SweepResult sweep(const ExperimentConfig& cfg, unsigned max_threads) {
  validate(cfg);

  std::vector<GridCell> cells;
  if (cfg.variant == Variant::quantum_delayed) {
    for (double a : cfg.alphas) {
      for (std::size_t i = 0; i < cfg.phis.size(); ++i) cells.push_back({a, cfg.phis[i], i});
    }
  } else {
    for (std::size_t i = 0; i < cfg.phis.size(); ++i) cells.push_back({std::nullopt, cfg.phis[i], i});
  }

  std::vector<SweepPoint> points(cells.size());
  std::vector<std::optional<std::string>> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        points[i] = evaluate(cells[i], cfg);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  unsigned n_threads = max_threads == 0 ? std::thread::hardware_concurrency() : max_threads;
  n_threads = std::clamp<unsigned>(n_threads, 1, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  std::vector<PointFailure> failures;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (errors[i]) failures.push_back({cells[i].alpha, cells[i].phi, *errors[i]});
  }
  if (!failures.empty()) throw SweepError(std::move(failures));

  SweepResult result;
  result.config = cfg;
  result.points = std::move(points);
  for (const SweepPoint& p : result.points) {
    result.max_abs_error_vs_theory =
        std::max(result.max_abs_error_vs_theory, std::abs(p.s0 - p.theory_s0));
  }

  const std::size_t n_phi = cfg.phis.size();
  const std::size_t n_curves = result.points.size() / n_phi;
  for (std::size_t k = 0; k < n_curves; ++k) {
    std::vector<CurveSample> curve;
    curve.reserve(n_phi);
    for (std::size_t i = 0; i < n_phi; ++i) {
      const SweepPoint& p = result.points[k * n_phi + i];
      curve.push_back({p.phi, p.s0});
    }
    VisibilityEntry entry;
    entry.alpha = result.points[k * n_phi].alpha;
    entry.visibility = visibility(curve);
    entry.theory = theory_visibility(cfg.variant, entry.alpha.value_or(0.0));
    result.visibility_by_alpha.push_back(entry);
  }
  return result;
}

}  // namespace mzsim
