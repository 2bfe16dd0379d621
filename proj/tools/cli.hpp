#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAbort = 1;
inline constexpr int kExitSkips = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitGuard = 65;

/// Runs the `mcds` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mcds::cli
