#pragma once

#include <string>
#include <vector>

namespace splitflow::tools {

/// Parses the command line (without the program name), loads the JSON
/// config, applies flag overrides and dispatches to the matching command.
///
/// Exit codes: 0 success (including a reported norm-guard trip), 2 config or
/// usage error, 3 failed convergence self-check (reference or oracle), 1 any
/// other runtime failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace splitflow::tools
