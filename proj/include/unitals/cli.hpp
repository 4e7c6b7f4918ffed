#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unitals::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2 };

/// Runs the command line given without the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitals::cli
