#pragma once

// In-process entry point for the command-line frontend, so tests can drive
// the full argv -> stdout/stderr -> exit-code path without spawning.
//
// Exit codes: 0 success, 1 computational failure (e.g. root non-convergence),
// 2 usage error (unknown subcommand, malformed or out-of-domain argument).

#include <iosfwd>
#include <string>
#include <vector>

namespace stirlab {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirlab
