#pragma once

// Command-line front end. Exit codes:
//   0  AlmostFree / certificate accepted / all checks passed
//   10 NotAlmostFree / certificate rejected / a check failed
//   2  malformed input or invalid parameters
//   3  input or output file could not be opened
//   4  a work or size budget was exhausted
//   1  internal error

#include <ostream>
#include <string>
#include <vector>

namespace afree::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_malformed = 2;
inline constexpr int exit_io = 3;
inline constexpr int exit_budget = 4;
inline constexpr int exit_negative = 10;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace afree::cli
