#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leibniz {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_input = 2, exit_budget = 3 };

/// Runs the command-line tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz
