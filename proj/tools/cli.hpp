#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcalc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kOutOfRange = 3,
};

// Runs the knotcalc command line on argv-style arguments (args[0] is the
// program name) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotcalc::cli
