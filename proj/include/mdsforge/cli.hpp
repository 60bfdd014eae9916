#pragma once

#include <iosfwd>

#include "mdsforge/error.hpp"

namespace mdsforge {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitResourceLimit = 2,
  kExitParseError = 3,
  kExitPrecondition = 4,
};

int exit_code_for(ErrorKind kind);

/// Entry point of the mdsforge tool.  JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdsforge
