#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace comfort::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // I/O, parse and usage errors
inline constexpr int kExitEstimation = 2;

/// Runs one command line (without the program name). JSON and CSV go to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comfort::cli
