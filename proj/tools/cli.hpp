#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fls::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

/// Runs one flsgeo invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fls::cli
