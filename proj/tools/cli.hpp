#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stratkit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;     ///< verdict mismatch or theorem precondition failure
inline constexpr int kInputError = 2;   ///< bad arguments, unreadable or invalid documents
inline constexpr int kDefect = 3;       ///< equivalence disagreement inside the library

/// Runs the command line `args` (without the program name). Document
/// arguments equal to "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stratkit::cli
