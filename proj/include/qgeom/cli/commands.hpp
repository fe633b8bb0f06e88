#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgeom/cli/format.hpp"

namespace qgeom::cli {

enum class Command { Eval, Sweep, Verify, CompareRandom };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitIoError = 3;

struct RunConfig {
  Command command = Command::Eval;
  Format format = Format::Json;
  double tolerance = 1e-9;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  std::size_t theta_steps = 50;
  std::size_t phi_steps = 50;
  bool degrees = false;
  unsigned shards = 1;
  std::optional<std::string> state_file;
  std::optional<std::string> inline_state;
  std::optional<std::string> output_file;
};

struct CommandResult {
  int exit_code;
  std::string output;
};

// Each command renders its result; errors surface as exceptions
// (InputError, qgeom::Error) handled by run_cli.
CommandResult cmd_eval(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_compare_random(const RunConfig& config);

// Full command line without the program name, e.g. {"eval", "--inline", "{...}"}.
// Writes rendered output to `out` (or --output FILE) and diagnostics to
// `err`; returns the process exit code. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgeom::cli
