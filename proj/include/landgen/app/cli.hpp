#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace landgen::app {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitWarnings = 1,  ///< validate only: warnings but no errors
    kExitError = 2,     ///< usage, parse, validation or dimension errors
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landgen::app
