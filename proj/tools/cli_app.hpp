#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sinkloc::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kInvalidInstance = 2, kInfeasible = 3, kMismatch = 4 };

// Runs one command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sinkloc::cli
