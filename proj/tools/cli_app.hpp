#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zonedet::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kSingularBlock = 3,
    kRhoNotLessThanOne = 4,
    kCholeskyBreakdown = 5,
    kDenseCapExceeded = 6,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zonedet::cli
