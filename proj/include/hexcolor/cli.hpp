#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexcolor {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3, kExitVerify = 4 };

/// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexcolor
