#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfl::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kConfigError = 2 };

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfl::cli
