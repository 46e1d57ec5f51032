#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>

#include "mzsim/errors.hpp"

namespace mzsim::cli {

namespace {

const std::map<std::string, Variant> kVariants{
    {"open", Variant::open},
    {"closed", Variant::closed},
    {"wheeler", Variant::wheeler},
    {"quantum-delayed", Variant::quantum_delayed},
};
const std::map<std::string, Mode> kModes{{"ideal", Mode::ideal_gate}, {"pulse", Mode::pulse_sequence}};
const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"json", Format::json}};

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::size_t write_all(std::ostream& out, const std::string& text) {
  out << text;
  out.flush();
  if (!out) throw IoError("failed to write output stream");
  return text.size();
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

RunRequest parse_args(std::span<const std::string> args) {
  CLI::App app{"Mach-Zehnder delayed-choice interferometer simulator", "mzsim"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Sweep one interferometer variant and emit the curves");

  std::string variant = "closed";
  std::string mode = "ideal";
  std::size_t phi_steps = 21;
  std::vector<double> alphas;
  double noise_p = 0.0;
  double purity = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t shots = 1000;
  std::string format = "csv";
  std::string out = "-";
  std::string visibility_out;
  bool degrees = false;
  SpinSystem sys;

  run->add_option("--variant", variant, "open | closed | wheeler | quantum-delayed")
      ->check(CLI::IsMember(kVariants))
      ->capture_default_str();
  run->add_option("--mode", mode, "ideal (exact gates) | pulse (echo pulse sequence)")
      ->check(CLI::IsMember(kModes))
      ->capture_default_str();
  run->add_option("--phi-steps", phi_steps, "Number of phase points over [0, 2pi]")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}))
      ->capture_default_str();
  run->add_option("--alphas", alphas, "Comma-separated ancilla angles (quantum-delayed only)")
      ->delimiter(',');
  run->add_option("--noise-p", noise_p, "Depolarizing strength applied after the circuit")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  run->add_option("--purity", purity, "Pseudopure residual purity in (0, 1]")
      ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0))
      ->capture_default_str();
  run->add_option("--seed", seed, "Wheeler coin seed")->capture_default_str();
  run->add_option("--shots", shots, "Wheeler shots per phase point")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  run->add_option("--format", format, "csv | json")->check(CLI::IsMember(kFormats))->capture_default_str();
  run->add_option("--out", out, "Output path, - for stdout")->capture_default_str();
  run->add_option("--visibility-out", visibility_out, "Also write the visibility table (CSV) here");
  run->add_flag("--degrees", degrees, "Read --alphas in degrees");
  run->add_option("--offset-target", sys.offset_target, "Target resonance offset [Hz]")
      ->capture_default_str();
  run->add_option("--offset-ancilla", sys.offset_ancilla, "Ancilla resonance offset [Hz]")
      ->capture_default_str();
  run->add_option("--j-coupling", sys.j_coupling, "Scalar coupling J [Hz]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--epsilon", sys.epsilon, "Thermal polarization")
      ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0 - 1e-16))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (run->get_option("--help")->count() > 0) throw HelpRequested(run->help());

  RunRequest req;
  ExperimentConfig& cfg = req.config;
  cfg.variant = kVariants.at(variant);
  cfg.mode = kModes.at(mode);
  cfg.phis = phi_grid(phi_steps);
  cfg.noise_p = noise_p;
  cfg.purity = purity;
  cfg.rng_seed = seed;
  cfg.shots = shots;
  cfg.sys = sys;
  req.format = kFormats.at(format);
  req.out = out;
  if (!visibility_out.empty()) req.visibility_out = visibility_out;

  const bool alphas_given = run->get_option("--alphas")->count() > 0;
  if (cfg.variant == Variant::quantum_delayed) {
    cfg.alphas = alphas_given ? alphas : default_alpha_grid();
    if (degrees) {
      for (double& a : cfg.alphas) a *= std::numbers::pi / 180.0;
    }
  } else if (alphas_given) {
    throw UsageError("--alphas: only valid with --variant quantum-delayed");
  }
  for (double a : cfg.alphas) {
    if (!std::isfinite(a)) throw UsageError("--alphas: values must be finite");
  }

  try {
    validate(cfg);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  return req;
}

RunRequest parse_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_args(args);
}

std::vector<std::string> to_args(const RunRequest& request) {
  const ExperimentConfig& cfg = request.config;
  std::vector<std::string> args{
      "run",
      "--variant", std::string(to_string(cfg.variant)),
      "--mode", std::string(to_string(cfg.mode)),
      "--phi-steps", std::to_string(cfg.phis.size()),
  };
  if (!cfg.alphas.empty()) {
    std::string list;
    for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
      if (i > 0) list += ',';
      list += exact(cfg.alphas[i]);
    }
    args.insert(args.end(), {"--alphas", list});
  }
  args.insert(args.end(), {
                              "--noise-p", exact(cfg.noise_p),
                              "--purity", exact(cfg.purity),
                              "--seed", std::to_string(cfg.rng_seed),
                              "--shots", std::to_string(cfg.shots),
                              "--offset-target", exact(cfg.sys.offset_target),
                              "--offset-ancilla", exact(cfg.sys.offset_ancilla),
                              "--j-coupling", exact(cfg.sys.j_coupling),
                              "--epsilon", exact(cfg.sys.epsilon),
                              "--format", request.format == Format::csv ? "csv" : "json",
                              "--out", request.out,
                          });
  if (request.visibility_out) args.insert(args.end(), {"--visibility-out", *request.visibility_out});
  return args;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const std::string& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("MZSIM_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v > 4096) {
    throw UsageError(std::string("MZSIM_THREADS: expected a thread count, got '") + raw + "'");
  }
  return static_cast<unsigned>(v);
}

std::size_t emit_sweep_csv(const SweepResult& result, std::ostream& out) {
  const std::string variant(to_string(result.config.variant));
  const std::string mode(to_string(result.config.mode));
  std::ostringstream os;
  os << "variant,mode,alpha,phi,s0,s1,theory_s0,line_t_low,line_t_high,line_a_low,line_a_high\n";
  for (const SweepPoint& p : result.points) {
    os << variant << ',' << mode << ',';
    if (p.alpha) os << format_number(*p.alpha);
    os << ',' << format_number(p.phi) << ',' << format_number(p.s0) << ',' << format_number(p.s1)
       << ',' << format_number(p.theory_s0) << ',';
    if (p.target_lines) {
      os << format_number(p.target_lines->scaled_low()) << ','
         << format_number(p.target_lines->scaled_high());
    } else {
      os << ',';
    }
    os << ',';
    if (p.ancilla_lines) {
      os << format_number(p.ancilla_lines->scaled_low()) << ','
         << format_number(p.ancilla_lines->scaled_high());
    } else {
      os << ',';
    }
    os << '\n';
  }
  return write_all(out, os.str());
}

std::size_t emit_visibility_table(const SweepResult& result, std::ostream& out) {
  std::ostringstream os;
  os << "alpha,visibility,theory_visibility\n";
  for (const VisibilityEntry& v : result.visibility_by_alpha) {
    if (v.alpha) os << format_number(*v.alpha);
    os << ',' << format_number(v.visibility) << ',' << format_number(v.theory) << '\n';
  }
  return write_all(out, os.str());
}

std::size_t emit_sweep_json(const SweepResult& result, const RunRequest& request,
                            std::ostream& out) {
  using nlohmann::ordered_json;
  const ExperimentConfig& cfg = result.config;

  auto lines_json = [](const std::optional<SpectrumLines>& lines) -> ordered_json {
    if (!lines) return nullptr;
    return ordered_json{{"low", lines->scaled_low()}, {"high", lines->scaled_high()}};
  };
  auto opt = [](const std::optional<double>& v) -> ordered_json {
    if (!v) return nullptr;
    return *v;
  };

  ordered_json doc;
  const std::vector<std::string> args = to_args(request);
  doc["metadata"] = {
      {"tool", "mzsim"},
      {"version", kToolVersion},
      {"args", args},
      {"command", join_args(args)},
      {"config",
       {
           {"variant", to_string(cfg.variant)},
           {"mode", to_string(cfg.mode)},
           {"alphas", cfg.alphas},
           {"phi_steps", cfg.phis.size()},
           {"noise_p", cfg.noise_p},
           {"purity", cfg.purity},
           {"seed", cfg.rng_seed},
           {"shots", cfg.shots},
           {"spin_system",
            {
                {"offset_target_hz", cfg.sys.offset_target},
                {"offset_ancilla_hz", cfg.sys.offset_ancilla},
                {"j_coupling_hz", cfg.sys.j_coupling},
                {"epsilon", cfg.sys.epsilon},
            }},
       }},
  };

  ordered_json points = ordered_json::array();
  for (const SweepPoint& p : result.points) {
    points.push_back({
        {"alpha", opt(p.alpha)},
        {"phi", p.phi},
        {"s0", p.s0},
        {"s1", p.s1},
        {"theory_s0", p.theory_s0},
        {"target_lines", lines_json(p.target_lines)},
        {"ancilla_lines", lines_json(p.ancilla_lines)},
        {"population_00", opt(p.population_00)},
        {"reduced_state_error", opt(p.reduced_state_error)},
    });
  }
  doc["points"] = std::move(points);

  ordered_json vis = ordered_json::array();
  for (const VisibilityEntry& v : result.visibility_by_alpha) {
    vis.push_back({{"alpha", opt(v.alpha)}, {"visibility", v.visibility}, {"theory_visibility", v.theory}});
  }
  doc["visibility"] = std::move(vis);
  doc["max_abs_error_vs_theory"] = result.max_abs_error_vs_theory;

  return write_all(out, doc.dump(2) + "\n");
}

}  // namespace mzsim::cli
