#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace qfg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInvariant = 3;

/// Parses `args` (without the program name), runs one subcommand and writes
/// its result to `out` (or to --out FILE). Diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qfg::cli
