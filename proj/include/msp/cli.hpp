#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msp::cli {

/// Process exit codes.
enum ExitCode : int {
    Success = 0,
    UsageError = 1,
    Unrealizable = 2,
    StrictMismatch = 3,
    NotQuasiUnipotent = 4,
    ModelMismatch = 5,
};

/// Runs the msperiods command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msp::cli
