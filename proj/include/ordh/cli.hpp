#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordh::cli {

/// Exit statuses of every subcommand.
enum ExitCode : int {
    ExitPass = 0,
    ExitFailure = 1, ///< an identity or inequality failed
    ExitUsage = 2,   ///< bad flags, unreadable config or symbol file, unsupported request
};

/// Largest truncation matrix dimension accepted on the command line.
inline constexpr std::size_t max_matrix_dim = 4096;

/// Runs `ordh <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ordh::cli
