#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gonseq {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // outside the cone, mismatch, unrealized target
  kExitUsage = 2,     // bad arguments, unreadable or malformed input
  kExitResource = 3,  // degree ceiling or arithmetic range exceeded
  kExitInternal = 4,
};

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gonseq
