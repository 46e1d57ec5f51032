#include <exception>
#include <fstream>
#include <iostream>

#include "cli/cli.hpp"
#include "mzsim/sweep.hpp"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

template <class Emit>
void write_to(const std::string& path, Emit&& emit) {
  if (path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw mzsim::cli::IoError("cannot open " + path + " for writing");
  emit(file);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = mzsim::cli;
  cli::RunRequest request;
  unsigned threads = 0;
  try {
    request = cli::parse_args(argc, argv);
    threads = cli::threads_from_env();
  } catch (const cli::HelpRequested& h) {
    std::cout << h.text();
    return 0;
  } catch (const cli::UsageError& e) {
    std::cerr << "mzsim: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    const mzsim::SweepResult result = mzsim::sweep(request.config, threads);
    write_to(request.out, [&](std::ostream& os) {
      if (request.format == cli::Format::csv) {
        cli::emit_sweep_csv(result, os);
      } else {
        cli::emit_sweep_json(result, request, os);
      }
    });
    if (request.visibility_out) {
      write_to(*request.visibility_out,
               [&](std::ostream& os) { cli::emit_visibility_table(result, os); });
    }
  } catch (const std::exception& e) {
    std::cerr << "mzsim: " << e.what() << '\n';
    return kExitComputation;
  }
  return 0;
}
