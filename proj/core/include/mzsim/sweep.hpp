#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzsim/experiments.hpp"

namespace mzsim {

struct PointFailure {
  std::optional<double> alpha;
  double phi = 0.0;
  std::string message;
};

/// One or more grid points failed; every failure is listed with its coordinates.
class SweepError : public std::runtime_error {
 public:
  explicit SweepError(std::vector<PointFailure> failures);
  const std::vector<PointFailure>& failures() const noexcept { return failures_; }

 private:
  std::vector<PointFailure> failures_;
};

/// Evaluates cfg.variant over the full (alpha, phi) grid.
///
/// Points are independent and are spread over up to `max_threads` workers
/// (0 means hardware concurrency). Assembly is by grid index, so the result
/// does not depend on scheduling. Wheeler points draw from stream = phi index.
SweepResult sweep(const ExperimentConfig& cfg, unsigned max_threads = 0);

}  // namespace mzsim
