#pragma once

#include <iosfwd>

namespace toriclift {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitInconclusive = 2, kExitUsage = 3 };

/// Runs one command. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toriclift
