#pragma once

#include <iosfwd>

namespace tanaka {

/// Exit codes of the command-line tool.
enum ExitCode : int { Ok = 0, ValidationFailed = 1, Usage = 2, CapReached = 3 };

/// Runs the `tanaka` command line with the given arguments (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tanaka
