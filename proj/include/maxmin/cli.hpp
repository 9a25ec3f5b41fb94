#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxmin::cli {

/// Exit codes: 0 verified result, 2 negative result (not separable, not
/// found, resolution exhausted), 1 error.
inline constexpr int kVerified = 0;
inline constexpr int kError = 1;
inline constexpr int kNegative = 2;

/// Runs one command. `args` excludes the program name. Result documents go to
/// `out` as JSON; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxmin::cli
