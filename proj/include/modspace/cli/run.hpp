#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modspace::cli {

enum ExitCode : int { ok = 0, validation_failure = 1, cap_exceeded = 2, malformed_input = 3 };

/// Parses the command line and dispatches to one command. Reports go to `out` (or to
/// the --out file), diagnostics to `err`.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
/// Same, with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modspace::cli
