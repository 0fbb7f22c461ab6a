#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mincorner {

// Exit codes used by the command line tool.
//   0  success / "yes" decision
//   1  "no" decision
//   2  usage or input error
//   3  resource cap exceeded
//   4  internal verification failure
enum ExitCode : int {
  kExitOk = 0,
  kExitNo = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
  kExitVerificationFailure = 4,
};

// Runs one subcommand. `in` serves as stdin for grid input when no file is
// given; all regular output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mincorner
