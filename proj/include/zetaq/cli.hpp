#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetaq {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs one command. args excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetaq
