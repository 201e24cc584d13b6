#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdcop::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kNumerical = 4 };

/// Runs the pdcop command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdcop::cli
