#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polysum::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // counterexample found, verification failed, false
inline constexpr int kUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`,
/// one record per line; progress and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysum::cli
