#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ugdual::cli {

/// Exit codes: 0 success, 1 validation or schema failure (and usage errors),
/// 2 a size cap was exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitCap = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ugdual::cli
