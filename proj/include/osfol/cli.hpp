#pragma once

#include <iosfwd>

namespace osfol {

/// Exit codes shared by the subcommands.
enum ExitCode : int {
  kExitProved = 0,
  kExitSaturated = 1,
  kExitResourceLimit = 2,
  kExitSendFailure = 3,
  kExitInputError = 4,
};

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osfol
