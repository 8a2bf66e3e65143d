#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degen {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `degen` tool; `args` excludes the program name.
/// Subcommands: numbers, poly, rsum, chars, check, padic.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degen
