#ifndef SPEXLAB_TOOLS_CLI_HPP
#define SPEXLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spexlab::cli {

/// Exit statuses.
inline constexpr int kSuccess = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// Runs the command line `args` (program name excluded). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spexlab::cli

#endif  // SPEXLAB_TOOLS_CLI_HPP
