#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace help::cli {

enum ExitCode { kOk = 0, kInputError = 1, kUndecided = 2 };

/// Runs the command line on args (without the program name). color enables ANSI escapes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color);

/// ANSI output unless HELP_NO_COLOR is set or stdout is not a terminal.
bool color_wanted();

}  // namespace help::cli
