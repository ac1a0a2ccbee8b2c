#pragma once

#include <ostream>

namespace gradedexp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `gradedexp` tool. Reports go to `out`, diagnostics and
// usage text to `err`. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gradedexp
