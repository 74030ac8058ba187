#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permtree {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permtree
