#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line with `args` (program name excluded), writing reports to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qeat::cli
