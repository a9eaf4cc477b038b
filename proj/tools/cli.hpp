#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsr::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kConvergenceError = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsr::cli
