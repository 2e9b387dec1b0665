#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qfgaps/characters.hpp"
#include "qfgaps/repr_sets.hpp"

namespace qfg {

/// Elements n of S(set1, set2, a) in [x, x + len]: n in set1 and n + a in set2.
/// `count` is exact; `witnesses` holds the first `witness_cap` of them.
struct CensusRecord {
  SetId set1;
  SetId set2;
  std::int64_t a = 0;
  std::uint64_t x = 0;
  std::uint64_t len = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> witnesses;
};

struct CorrelationReport {
  std::string psi;
  std::int64_t a = 0;
  std::uint64_t x = 0;
  std::int64_t J = 0;
  double main = 0;  // slope beta * eta*
  double ratio = 0;  // J / (main * x)
};

inline constexpr std::uint64_t kDefaultWitnessCap = 10'000;

/// sum over n <= x, gcd(n, b) = 1, n + a >= 1 of F_psi(n) F_chi4(n + a).
std::int64_t correlation_j(const DirichletCharacter& psi, std::int64_t a, std::uint64_t x);

/// sum over n <= x of F_psi(n) F_rho(n + a), a >= 1.
std::int64_t correlation_general(const DirichletCharacter& psi, const DirichletCharacter& rho, std::int64_t a,
                                 std::uint64_t x);

/// sum over n <= x, n + a >= 1 of r2(n) r2(n + a).
std::int64_t estermann_correlation(std::int64_t a, std::uint64_t x);

/// Census of S(set1, set2, a) on [x, x + len]. Candidates with n + a < 0 are skipped.
/// `chunk` (0 = automatic) only changes how the window is split, never the result.
CensusRecord census_interval(const SetId& set1, const SetId& set2, std::int64_t a, std::uint64_t x,
                             std::uint64_t len, std::uint64_t witness_cap = kDefaultWitnessCap,
                             std::uint64_t chunk = 0);

/// One report per x, comparing correlation_j with the slope main_term(psi, a).
std::vector<CorrelationReport> ratio_report(const DirichletCharacter& psi, std::int64_t a,
                                            std::span<const std::uint64_t> xs, double eps = 1e-9);

}  // namespace qfg
