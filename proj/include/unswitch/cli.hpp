#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unswitch {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // NO / NOT-SPLIT / SWITCHABLE / NONE
inline constexpr int kExitInputError = 2;

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unswitch
