#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperverify::cli {

inline constexpr int kExitMatch = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `argv[0]` is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with `args` excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperverify::cli
