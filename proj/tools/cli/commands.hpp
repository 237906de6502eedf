#pragma once

#include <ostream>

namespace hdist::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kDomainError = 2,
  kSolverFailure = 3,
};

/// Parses argv and runs one subcommand. Reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hdist::cli
