#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motzkin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

// Runs one command. `args` excludes the program name, e.g. {"diff", "--max", "6"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motzkin::cli
