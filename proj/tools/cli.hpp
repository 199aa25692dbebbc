#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace molien::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kVerificationFailed = 2,
    kConjectureViolation = 3,
    kInternalError = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace molien::cli
