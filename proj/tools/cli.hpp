#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lapcoef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Default size guards; --force lifts them.
inline constexpr int kPairwiseMaxN = 14;
inline constexpr int kPerTreeMaxN = 20;

/// Runs the command line `args` (args[0] is the program name). Tree input
/// comes from `in` unless --input names a file; results go to `out` unless
/// --output names one.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lapcoef::cli
