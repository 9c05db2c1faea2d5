#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kkinetics {

/// Exit codes of the kkinetics command.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs `kkinetics <args...>` (args excludes the program name) and returns
/// the process exit code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kkinetics
