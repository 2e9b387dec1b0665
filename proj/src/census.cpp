#include "qfgaps/census.hpp"

#include <numeric>
#include <stdexcept>

#include "qfgaps/analytic_constants.hpp"
#include "qfgaps/arith.hpp"
#include "qfgaps/errors.hpp"
#include "qfgaps/parallel.hpp"

namespace qfg {
namespace {

constexpr std::uint64_t kCensusChunk = std::uint64_t{1} << 22;

std::uint64_t first_index(std::int64_t a) { return a >= 0 ? 1 : static_cast<std::uint64_t>(1 - a); }

void check_budget(std::uint64_t x, std::int64_t a) {
  const std::uint64_t reach = x + static_cast<std::uint64_t>(a < 0 ? -a : a);
  if (reach > kMaxWindow) throw BudgetError("correlation range exceeds 10^9");
}

}  // namespace

std::int64_t correlation_j(const DirichletCharacter& psi, std::int64_t a, std::uint64_t x) {
  if (a == 0) throw std::invalid_argument("correlation_j: a must be non-zero");
  check_budget(x, a);
  const std::uint64_t start = first_index(a);
  if (x < start) return 0;
  const auto f_psi = divisor_sum_table(psi, x);
  const auto f_chi4 = divisor_sum_table(DirichletCharacter::chi4(), static_cast<std::uint64_t>(x + a));
  const std::uint64_t b = psi.modulus();
  std::int64_t total = 0;
  for (std::uint64_t n = start; n <= x; ++n) {
    if (std::gcd(n, b) != 1) continue;
    total += static_cast<std::int64_t>(f_psi[n]) * f_chi4[n + a];
  }
  return total;
}

std::int64_t correlation_general(const DirichletCharacter& psi, const DirichletCharacter& rho, std::int64_t a,
                                 std::uint64_t x) {
  if (a < 1) throw std::invalid_argument("correlation_general: a must be >= 1");
  check_budget(x, a);
  if (x == 0) return 0;
  const auto f_psi = divisor_sum_table(psi, x);
  const auto f_rho = divisor_sum_table(rho, x + a);
  std::int64_t total = 0;
  for (std::uint64_t n = 1; n <= x; ++n) total += static_cast<std::int64_t>(f_psi[n]) * f_rho[n + a];
  return total;
}

std::int64_t estermann_correlation(std::int64_t a, std::uint64_t x) {
  if (a == 0) throw std::invalid_argument("estermann_correlation: a must be non-zero");
  check_budget(x, a);
  const std::uint64_t start = first_index(a);
  if (x < start) return 0;
  const auto f = divisor_sum_table(DirichletCharacter::chi4(), static_cast<std::uint64_t>(x + a));
  std::int64_t total = 0;
  for (std::uint64_t n = start; n <= x; ++n) total += 16 * static_cast<std::int64_t>(f[n]) * f[n + a];
  return total;
}

CensusRecord census_interval(const SetId& set1, const SetId& set2, std::int64_t a, std::uint64_t x,
                             std::uint64_t len, std::uint64_t witness_cap, std::uint64_t chunk) {
  if (len >= kMaxWindow) throw BudgetError("census window exceeds 10^9");
  CensusRecord rec{set1, set2, a, x, len, 0, {}};
  // Skip n with n + a < 0.
  std::uint64_t lo = x;
  if (a < 0 && x < static_cast<std::uint64_t>(-a)) lo = static_cast<std::uint64_t>(-a);
  const std::uint64_t hi = x + len;
  if (lo > hi) return rec;

  const std::uint64_t step = chunk ? chunk : kCensusChunk;
  const std::size_t chunks = (hi - lo) / step + 1;
  std::vector<std::vector<std::uint64_t>> hits(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t u = lo + c * step;
    const std::uint64_t w = std::min(hi, u + step - 1);
    const auto first = sieve_members(set1, u, w);
    const auto second = sieve_members(set2, static_cast<std::uint64_t>(u + a), static_cast<std::uint64_t>(w + a));
    for (std::uint64_t i = 0; i <= w - u; ++i) {
      if (first[i] && second[i]) hits[c].push_back(u + i);
    }
  });
  for (const auto& part : hits) {
    rec.count += part.size();
    for (std::uint64_t n : part) {
      if (rec.witnesses.size() >= witness_cap) break;
      rec.witnesses.push_back(n);
    }
  }
  return rec;
}

std::vector<CorrelationReport> ratio_report(const DirichletCharacter& psi, std::int64_t a,
                                            std::span<const std::uint64_t> xs, double eps) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] <= xs[i - 1]) throw std::invalid_argument("ratio_report: xs must be increasing");
  }
  const TruncatedValue slope = main_term(psi, a, eps);
  std::vector<CorrelationReport> out;
  out.reserve(xs.size());
  for (std::uint64_t x : xs) {
    CorrelationReport r{psi.id(), a, x, correlation_j(psi, a, x), slope.value, 0};
    r.ratio = static_cast<double>(r.J) / (slope.value * static_cast<double>(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qfg
