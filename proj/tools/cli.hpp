#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hasse::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kFalse = 1,
  kInvalidInput = 2,
  kFormatError = 3,
};

/// Runs the command line `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hasse::cli
