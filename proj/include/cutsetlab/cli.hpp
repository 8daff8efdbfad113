#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cutsetlab::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Default sweep/realize order cap; CUTSETLAB_MAX_N may raise it up to
/// kSweepHardCap.
inline constexpr int kDefaultMaxN = 7;

/// Runs the command line with args[0] as the program name. Reports go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutsetlab::cli
