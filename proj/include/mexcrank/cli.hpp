#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mexcrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; `args` excludes the program name. Machine-readable
/// output goes to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mexcrank::cli
