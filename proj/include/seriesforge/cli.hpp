#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seriesforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Runs the command line (without the program name). Results go to `out`,
/// diagnostics to `err`; returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seriesforge
