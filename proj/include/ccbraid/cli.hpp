#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // DISTINCT, or a failed check
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccb::cli
