#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffilt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one command line (args[0] is the program name). Documents are read
/// from the positional input path, or from `in` when it is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cliffilt::cli
