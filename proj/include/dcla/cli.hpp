#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "dcla/matrix.hpp"

namespace dcla::cli {

enum class Command { Spectral, Svd, Eig, Verify, Gen };

enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,   // unreadable file or JSON syntax error
  kValidation = 2,  // schema, shape, NotHermitian, bad arguments
  kNumerical = 3,   // IllConditionedGap, residual over tolerance
};

struct JobSpec {
  Command command = Command::Spectral;
  std::string input_path;
  std::string input_dir;
  std::string output_path;  // empty: stdout (single input only)
  Tolerances tolerances;
  std::optional<std::uint64_t> seed;
  RandomKind kind = RandomKind::General;
  Eigen::Index m = 0;
  Eigen::Index n = 0;
  bool compact = false;
};

/// Parses "group=..,resid=..,zero=.." (any subset, comma separated) over base.
/// Throws Error(InvalidArgument) on unknown keys or bad numbers.
Tolerances parse_tolerance_overrides(std::string_view text, Tolerances base);

/// Executes one job; results go to the output path or `out`, diagnostics to `err`.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Command-line entry point for `dctool`.
int main(int argc, char** argv);

}  // namespace dcla::cli
