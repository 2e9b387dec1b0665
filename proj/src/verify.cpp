#include "qfgaps/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <numeric>
#include <stdexcept>

#include "qfgaps/analytic_constants.hpp"
#include "qfgaps/arith.hpp"
#include "qfgaps/census.hpp"
#include "qfgaps/characters.hpp"
#include "qfgaps/gaps.hpp"
#include "qfgaps/local_densities.hpp"
#include "qfgaps/parallel.hpp"
#include "qfgaps/repr_sets.hpp"

namespace qfg {
namespace {

// Collects cases for one check; remembers the first failure.
class Check {
 public:
  Check(std::string suite, std::string name) : result_{std::move(suite), std::move(name), true, 0, {}} {}

  template <class... Args>
  void expect(bool ok, const Args&... what) {
    ++result_.cases;
    if (ok || !result_.pass) return;
    result_.pass = false;
    std::ostringstream os;
    (os << ... << what);
    result_.detail = os.str();
  }

  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<DirichletCharacter> real_characters() {
  return {DirichletCharacter::chi3(), DirichletCharacter::chi4(), DirichletCharacter::chi6(),
          DirichletCharacter::kronecker(5), DirichletCharacter::kronecker(-8), DirichletCharacter::kronecker(12)};
}

// Runs `body(i)` in parallel over [0, count) and folds the boolean verdicts in index order.
template <class Body>
void check_range(Check& c, std::size_t count, Body&& body) {
  std::vector<std::string> failure(count);
  std::vector<char> ok(count, 1);
  parallel_for(count, [&](std::size_t i) {
    std::string why = body(i);
    if (!why.empty()) {
      ok[i] = 0;
      failure[i] = std::move(why);
    }
  });
  for (std::size_t i = 0; i < count; ++i) c.expect(ok[i] != 0, failure[i]);
}

void oracle_suite(unsigned budget, std::vector<CheckResult>& out) {
  const std::uint64_t nmax = 2000ull * budget;
  {
    Check c("oracles", "eta_vs_brute");
    const std::uint64_t qmax = std::min<std::uint64_t>(200, 40ull * budget);
    const std::int64_t amax = std::min<std::int64_t>(50, 10 * budget);
    check_range(c, qmax, [&](std::size_t i) -> std::string {
      const std::uint64_t q = i + 1;
      for (std::int64_t a = -amax; a <= amax; ++a) {
        if (a == 0) continue;
        if (eta(a, q) != eta_brute(a, q)) return "a=" + std::to_string(a) + " q=" + std::to_string(q);
      }
      return {};
    });
    out.push_back(std::move(c).done());
  }
  {
    Check c("oracles", "r2_formula_vs_enumeration");
    check_range(c, nmax, [](std::size_t i) -> std::string {
      const std::uint64_t n = i + 1;
      return r2(n, ReprMode::Formula) == r2(n, ReprMode::Enumerate) ? "" : "n=" + std::to_string(n);
    });
    out.push_back(std::move(c).done());
  }
  {
    Check c("oracles", "R2_formula_vs_enumeration");
    check_range(c, nmax, [](std::size_t i) -> std::string {
      const std::uint64_t n = i + 1;
      return R2(n, ReprMode::Formula) == R2(n, ReprMode::Enumerate) ? "" : "n=" + std::to_string(n);
    });
    out.push_back(std::move(c).done());
  }
  {
    Check c("oracles", "R2_equals_6_ideal_count");
    check_range(c, nmax, [](std::size_t i) -> std::string {
      const std::uint64_t n = i + 1;
      return R2(n) == 6 * ideal_count(n, -3) ? "" : "n=" + std::to_string(n);
    });
    out.push_back(std::move(c).done());
  }
  {
    Check c("oracles", "divisor_sum_table_vs_direct");
    for (const auto& chi : real_characters()) {
      const auto table = divisor_sum_table(chi, nmax);
      const auto window = divisor_sum_window(chi, 1, nmax);
      for (std::uint64_t n = 1; n <= nmax; ++n) {
        const auto direct = divisor_sum(chi, n);
        c.expect(table[n] == direct && window[n - 1] == direct, chi.id(), " n=", n);
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("oracles", "sqrt_trick_vs_direct");
    for (const auto& chi : real_characters()) {
      for (std::uint64_t n = 1; n <= nmax; ++n) {
        if (chi(static_cast<std::int64_t>(n)) != 1) continue;
        c.expect(divisor_sum_sqrt(chi, n) == divisor_sum(chi, n), chi.id(), " n=", n);
      }
    }
    out.push_back(std::move(c).done());
  }
}

void lemma_suite(unsigned budget, std::vector<CheckResult>& out) {
  {
    Check c("lemmas", "lambda_closed_forms");
    const std::int64_t amax = std::min<std::int64_t>(30, 10 * budget);
    const unsigned jmax = std::min(4u, 1 + budget);
    for (std::uint64_t p : primes_up_to(50)) {
      if (p == 2) continue;
      for (unsigned j = 1; j <= jmax; ++j) {
        const std::uint64_t q = ipow(p, j);
        for (std::int64_t a = -amax; a <= amax; ++a) {
          if (a == 0) continue;
          const Rational want(static_cast<std::int64_t>(eta_brute(a, q)), static_cast<std::int64_t>(q));
          c.expect(lambda_prime_power(p, j, a) == want, "p=", p, " j=", j, " a=", a);
        }
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("lemmas", "two_power_bound");
    const unsigned jmax = std::min(16u, 8 + budget);
    const std::int64_t amax = std::min<std::int64_t>(100, 20 * budget);
    for (unsigned j = 1; j <= jmax; ++j) {
      for (std::int64_t a = -amax; a <= amax; ++a) {
        if (a == 0) continue;
        const Rational v = lambda_prime_power(2, j, a);
        c.expect(v >= Rational(0) && v <= Rational(4), "j=", j, " a=", a);
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("lemmas", "triangle_star_subset_triangle");
    const std::uint64_t nmax = 10000ull * budget;
    const auto star = sieve_members(SetId::triangle_star(), 0, nmax);
    const auto tri = sieve_members(SetId::triangle(), 0, nmax);
    for (std::uint64_t n = 0; n <= nmax; ++n) c.expect(!star[n] || tri[n], "n=", n);
    out.push_back(std::move(c).done());
  }
  {
    Check c("lemmas", "divisor_sum_vanishes_when_psi_is_minus_one");
    const std::uint64_t nmax = 2000ull * budget;
    for (const auto& chi : real_characters()) {
      const auto table = divisor_sum_table(chi, nmax);
      for (std::uint64_t n = 1; n <= nmax; ++n) {
        if (chi(static_cast<std::int64_t>(n)) == -1) c.expect(table[n] == 0, chi.id(), " n=", n);
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("lemmas", "lambda_bar_vanishing_tail");
    const std::int64_t amax = 10 * budget;
    for (std::int64_t a = 1; a <= amax; ++a) {
      for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(a)).factors) {
        if (p == 2) continue;
        for (unsigned j = e + 2; j <= e + 6; ++j) {
          const std::uint64_t q = ipow(p, j);
          if (q > (std::uint64_t{1} << 40)) break;
          c.expect(lambda_bar(a, q).value == Rational(0), "a=", a, " p^j=", q);
        }
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("lemmas", "divisor_sum_multiplicative");
    const std::uint64_t mmax = 40ull * budget;
    for (const auto& chi : real_characters()) {
      for (std::uint64_t m = 1; m <= mmax; ++m) {
        for (std::uint64_t n = m; n <= mmax; ++n) {
          if (std::gcd(m, n) != 1) continue;
          c.expect(divisor_sum(chi, m * n) == divisor_sum(chi, m) * divisor_sum(chi, n), chi.id(), " m=", m, " n=", n);
        }
      }
    }
    out.push_back(std::move(c).done());
  }
}

void constant_suite(unsigned budget, std::vector<CheckResult>& out) {
  const auto chi6 = DirichletCharacter::chi6();
  {
    Check c("constants", "eta_j_mod_6_table");
    const std::uint64_t want[6] = {2, 8, 8, 2, 8, 8};
    for (std::int64_t j = 0; j < 6; ++j) c.expect(eta(j, 6) == want[j] && eta_brute(j, 6) == want[j], "j=", j);
    out.push_back(std::move(c).done());
  }
  {
    Check c("constants", "eta_star_chi6");
    c.expect(eta_star(chi6, 1).coefficient == Rational(1, 9), "eta*(chi6,1) != pi/9");
    for (std::int64_t a = 0; a < 6; ++a) c.expect(eta_star(chi6, a).coefficient > Rational(0), "a=", a);
    out.push_back(std::move(c).done());
  }
  {
    Check c("constants", "l_value_closed_forms");
    const auto l4 = l_value(DirichletCharacter::chi4(), 1, 1e-10);
    const auto l3 = l_value(DirichletCharacter::chi3(), 1, 1e-10);
    c.expect(std::fabs(l4.value - std::numbers::pi / 4) < 1e-8, "L(1,chi4)");
    c.expect(std::fabs(l3.value - std::numbers::pi / (3 * std::sqrt(3.0))) < 1e-8, "L(1,chi3)");
    out.push_back(std::move(c).done());
  }
  {
    Check c("constants", "beta_positive");
    const std::int64_t amax = std::min<std::int64_t>(20, 5 * budget);
    for (std::int64_t a = -amax; a <= amax; ++a) {
      if (a == 0) continue;
      const auto b = beta(chi6, a, 1e-6);
      c.expect(b.value - b.error_bound > 0, "a=", a);
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("constants", "euler_factor_positive");
    const std::uint64_t pmax = 100ull * budget;
    for (std::uint64_t p : primes_up_to(pmax)) {
      if (p == 2) continue;
      for (std::int64_t a : {1, 2, 3, 5, 9, 15, 25, -7}) {
        for (double s : {1.0, 1.5, 2.0}) {
          const auto g = euler_factor(chi6, a, p, s);
          c.expect(g.value > 0, "p=", p, " a=", a, " s=", s);
        }
        if (p >= 5) {
          const auto g = euler_factor(DirichletCharacter::kronecker(-8) * DirichletCharacter::trivial(2), a, p, 1.0);
          c.expect(std::fabs(g.value) >= 1 - 2.0 / static_cast<double>(p - 1), "lower bound p=", p, " a=", a);
        }
      }
    }
    out.push_back(std::move(c).done());
  }
}

void gap_suite(unsigned budget, std::uint64_t seed, std::vector<CheckResult>& out) {
  {
    Check c("gaps", "norm_form_vs_exhaustive");
    const std::int64_t amax = 100 * budget;
    for (std::int64_t a = -amax; a <= amax; ++a) {
      if (a == 0) continue;
      const auto bound = static_cast<std::int64_t>(10 * std::sqrt(static_cast<double>(std::llabs(a))));
      bool exists = false;
      for (std::int64_t m = 0; m <= bound && !exists; ++m) {
        const std::int64_t v = a + 3 * m * m;
        exists = v >= 0 && is_square(static_cast<std::uint64_t>(v));
      }
      const auto sol = represent_norm_form(a);
      c.expect(sol.has_value() == exists && (!sol || sol->n * sol->n - 3 * sol->m * sol->m == a), "a=", a);
    }
    out.push_back(std::move(c).done());
  }
  {
    Check c("gaps", "witness_membership");
    const std::size_t samples = 50ull * budget;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::int64_t, std::uint64_t>> cases(samples);
    for (auto& [a, x] : cases) {
      a = static_cast<std::int64_t>(rng() % 100) - 50;
      if (a >= 0) ++a;
      const double lg = static_cast<double>(rng() % 1'000'000) / 1e6 * 10.0;
      x = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::pow(10.0, lg)));
    }
    check_range(c, samples, [&](std::size_t i) -> std::string {
      const auto [a, x] = cases[i];
      for (const GapWitness& w : {gap_triangle_square2(a, x), gap_square2_square2(a, x)}) {
        const auto shifted = static_cast<std::uint64_t>(static_cast<std::int64_t>(w.n) + a);
        const bool first = w.branch == GapBranch::Sq2Sq2 ? r2(w.n) > 0 : R2(w.n) > 0;
        const bool second = shifted == 0 || r2(shifted) > 0;
        if (!first || !second || w.n <= x) return "a=" + std::to_string(a) + " x=" + std::to_string(x);
      }
      return {};
    });
    out.push_back(std::move(c).done());
  }
  {
    Check c("gaps", "census_chunking_invariant");
    const std::uint64_t len = 5000ull * budget;
    for (std::int64_t a : {1, -3, 6}) {
      const auto whole = census_interval(SetId::triangle(), SetId::square2(), a, 1000, len, 50);
      const auto pieces = census_interval(SetId::triangle(), SetId::square2(), a, 1000, len, 50, 333);
      c.expect(whole.count == pieces.count && whole.witnesses == pieces.witnesses, "a=", a);
    }
    out.push_back(std::move(c).done());
  }
}

}  // namespace

bool is_verify_suite(std::string_view suite) {
  return suite == "oracles" || suite == "lemmas" || suite == "constants" || suite == "gaps" || suite == "all";
}

std::vector<CheckResult> run_verify(std::string_view suite, unsigned budget, std::uint64_t seed) {
  if (!is_verify_suite(suite)) throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  if (budget == 0) return out;
  const bool all = suite == "all";
  if (all || suite == "oracles") oracle_suite(budget, out);
  if (all || suite == "lemmas") lemma_suite(budget, out);
  if (all || suite == "constants") constant_suite(budget, out);
  if (all || suite == "gaps") gap_suite(budget, seed, out);
  return out;
}

}  // namespace qfg
