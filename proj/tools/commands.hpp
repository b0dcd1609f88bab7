#ifndef QHS_TOOLS_COMMANDS_HPP
#define QHS_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qhs::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kPrecisionWarning = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhs::cli

#endif  // QHS_TOOLS_COMMANDS_HPP
