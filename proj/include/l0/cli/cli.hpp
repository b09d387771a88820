// Command-line front end. `run` is the whole program minus process I/O, so
// tests can drive it in-process.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace l0::cli {

enum ExitCode : int { kOk = 0, kError = 1, kInfeasible = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l0::cli
