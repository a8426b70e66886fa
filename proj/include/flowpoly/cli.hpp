#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowpoly {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
  kExitLimit = 3,
  kExitInternal = 4,
};

/// Runs one command line (without the program name). Graph input named "-"
/// is read from `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace flowpoly
