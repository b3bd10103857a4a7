#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace citaylor {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitInputError = 2,
  kExitCapExceeded = 3,
};

/// Entry point of the `citaylor` tool; args excludes the program name.
/// Subcommands: taylor, resolve, verify, betti, export-dot, check-exactness.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace citaylor
