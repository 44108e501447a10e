#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unilift::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

// Runs one subcommand. args excludes the program name. The JSON report goes
// to out, progress and diagnostics to err; "-" file arguments read from in.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace unilift::cli
