#pragma once

#include <iosfwd>

namespace ppj::cli {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kUsageError = 2 };

/// Runs one ppj invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppj::cli
