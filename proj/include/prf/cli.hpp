#pragma once

#include <iosfwd>

namespace prf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBudget = 2,
  kMissing = 3,
  kIo = 4,
  kVerifyFailed = 5,
};

// Parses argv and runs one subcommand. Never throws; errors become exit codes
// with a message on err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prf::cli
