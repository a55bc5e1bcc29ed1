#pragma once

#include <iosfwd>

namespace dp5 {

/// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitInvalidInput = 1, kExitResourceLimit = 2 };

/// Runs `dp5 <subcommand> ...`; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dp5
