#pragma once

#include <iosfwd>

namespace gmext {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // crosscheck, certification or scan invariant failure
  kExitUsage = 2,
  kExitNumeric = 3,
};

// Entry point of the `gmext` tool. Machine-readable output goes to `out`,
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmext
