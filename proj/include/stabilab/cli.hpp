#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabilab {

// Exit statuses of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Runs the front end on `args` (without the program name). Reports go to
// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "3", "1..4" or "1,2,5" into a sorted list without duplicates.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace stabilab
