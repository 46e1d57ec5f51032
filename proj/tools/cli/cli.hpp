#pragma once

// Command-line front end for the interferometer simulator: argument parsing
// and CSV/JSON serialization of sweep results.

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzsim/experiments.hpp"

namespace mzsim::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { csv, json };

/// Bad flag or value. The message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; `text()` holds the rendered help.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  const char* text() const noexcept { return what(); }
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunRequest {
  ExperimentConfig config;
  Format format = Format::csv;
  std::string out = "-";  // "-" is stdout
  std::optional<std::string> visibility_out;

  friend bool operator==(const RunRequest&, const RunRequest&) = default;
};

/// Parses `mzsim run ...` (args exclude the program name).
RunRequest parse_args(std::span<const std::string> args);
RunRequest parse_args(int argc, const char* const* argv);

/// Canonical flag list that parse_args maps back to an equal config.
std::vector<std::string> to_args(const RunRequest& request);
std::string join_args(const std::vector<std::string>& args);

/// Worker cap from MZSIM_THREADS; 0 when unset. Throws UsageError on garbage.
unsigned threads_from_env();

/// Header `variant,mode,alpha,phi,s0,s1,theory_s0,line_t_low,line_t_high,line_a_low,line_a_high`,
/// one row per grid point, 12 significant digits. Returns bytes written.
std::size_t emit_sweep_csv(const SweepResult& result, std::ostream& out);

/// `alpha,visibility,theory_visibility`, one row per curve.
std::size_t emit_visibility_table(const SweepResult& result, std::ostream& out);

/// Same content as the CSV plus a metadata header (config, seed, args, version).
std::size_t emit_sweep_json(const SweepResult& result, const RunRequest& request,
                            std::ostream& out);

/// %.12g, with negative zero printed as 0.
std::string format_number(double value);

}  // namespace mzsim::cli
