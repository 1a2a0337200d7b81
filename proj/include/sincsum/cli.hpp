#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sincsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing data to
/// `out` and diagnostics to `err`.  Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sincsum::cli
