#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grover::app {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  ///< invariant violation or engine disagreement
    kExitUsage = 2,    ///< bad arguments or invalid input files
};

/// Runs the grover-sim command line. `args` excludes the program name.
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grover::app
