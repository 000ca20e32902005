#pragma once

#include <ostream>

namespace decoshell {

enum ExitCode : int {
    kExitOk = 0,
    kExitSelftestFailed = 1,
    kExitPhase = 2,
    kExitNumeric = 3,
    kExitUsage = 4,
};

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace decoshell
