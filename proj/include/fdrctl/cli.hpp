#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fdrctl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs the command line front end on `args` (without the program name).
/// Returns the process exit code: 0 success, 1 data error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdrctl
