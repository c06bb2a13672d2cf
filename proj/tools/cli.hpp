#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fareyplumb::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInconclusive = 1,  // some obstruction search hit a cap; results still written
    kUsage = 2,
    kInternal = 3,      // a consistency check failed
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fareyplumb::cli
