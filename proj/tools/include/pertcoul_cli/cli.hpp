#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pertcoul::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_constraint = 2,
    exit_assert = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pertcoul::cli
