#pragma once

// Command dispatch for the photofpt tool, kept out of main() so tests can
// drive it with in-memory streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace photofpt::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailure = 1,
    kUsage = 2,
    kSimulationQuality = 3,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest-free fixed format: 17 significant digits, '.' separator.
std::string format_double(double v);

}  // namespace photofpt::cli
