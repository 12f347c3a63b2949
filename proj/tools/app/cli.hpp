#pragma once

#include <ostream>

namespace ndagg::app {

enum ExitCode : int { kOk = 0, kViolation = 1, kInvalid = 2, kIoError = 3 };

// Parses argv, runs one command, and writes its report to `out` (or the
// --output file). Diagnostics go to `err`.
int runCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ndagg::app
