#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qfg {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = true;
  std::uint64_t cases = 0;
  std::string detail;  // first counterexample, empty on success
};

/// Runs the invariant checks of one suite ("oracles", "lemmas", "constants",
/// "gaps") or of all of them ("all"). Sizes scale linearly with `budget`;
/// budget 0 runs nothing. Results depend only on (suite, budget, seed).
std::vector<CheckResult> run_verify(std::string_view suite, unsigned budget, std::uint64_t seed);

bool is_verify_suite(std::string_view suite);

}  // namespace qfg
