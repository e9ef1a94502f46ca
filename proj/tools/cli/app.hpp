#pragma once

#include <ostream>

namespace rahecke::cli {

// Exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInput = 2,
  kExitTheoremCheck = 3,
  kExitResource = 4,
};

// Entry point of the rahecke command line; output goes to out, diagnostics
// and warnings to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rahecke::cli
