#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcover {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitBoundFailed = 2, kExitInternal = 3 };

/// Runs one CLI invocation; args excludes the program name. Summaries go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcover
