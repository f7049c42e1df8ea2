#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace altfermat {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    exit_success = 0,
    exit_inconclusive = 1,
    exit_usage = 2,
    exit_io = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace altfermat
