#include "qfgaps/gaps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qfgaps/errors.hpp"
#include "qfgaps/repr_sets.hpp"

namespace qfg {
namespace {

std::uint64_t uabs(std::int64_t a) { return a < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(a) : a; }

// Least s >= 0 with s^2 + base > x.
std::uint64_t least_s_above(std::uint64_t base, std::uint64_t x) {
  if (base > x) return 0;
  return isqrt(x - base) + 1;
}

void verify_witness(const GapWitness& w, const SetId& first) {
  const i128 shifted = static_cast<i128>(w.n) + w.a;
  if (w.n <= w.x) throw InvariantError("gap witness does not exceed x");
  if (shifted < 0 || !is_member(first, w.n) || !is_member(SetId::square2(), static_cast<std::uint64_t>(shifted))) {
    throw InvariantError("gap witness " + std::to_string(w.n) + " failed membership for a = " + std::to_string(w.a));
  }
}

GapWitness scan_witness(std::int64_t a, std::uint64_t x) {
  GapWitness w{a, x, 0, 0, GapBranch::Scan, ScanParams{0}};
  for (std::uint64_t n = x + 1, steps = 1;; ++n, ++steps) {
    const i128 shifted = static_cast<i128>(n) + a;
    if (shifted < 0) continue;
    if (is_member(SetId::triangle(), n) && is_member(SetId::square2(), static_cast<std::uint64_t>(shifted))) {
      w.n = n;
      w.offset = n - x;
      w.params = ScanParams{steps};
      return w;
    }
  }
}

// 4 f(0, d) = (3d^2 + a - 1)^2 + 12 d^2.
i128 four_f0(std::int64_t d, std::int64_t a) {
  const i128 inner = 3 * static_cast<i128>(d) * d + a - 1;
  return inner * inner + 12 * static_cast<i128>(d) * d;
}

struct GenericSetup {
  int l1;
  int l2;
  std::int64_t q;
  std::int64_t qstar;
  i128 b;       // 3 Q*^2 + a - 1
  i128 disc4;   // x - 3 Q*^2, a quarter of the discriminant
  i128 four_e;  // 4 (f(0, Q*) - x)
};

GenericSetup generic_setup(std::int64_t a, std::uint64_t x) {
  GenericSetup g{};
  // l1 + l2 - a odd; prefer l2 = 0, which always admits a valid l1.
  g.l2 = 0;
  g.l1 = static_cast<int>(uabs(a + 1) % 2);
  const i128 four_x = 4 * static_cast<i128>(x);
  std::int64_t d = g.l2;
  while (four_f0(d, a) <= four_x) d += 2;
  g.q = d;
  g.qstar = d + 2;
  const i128 q2 = static_cast<i128>(g.qstar) * g.qstar;
  g.b = 3 * q2 + a - 1;
  g.disc4 = static_cast<i128>(x) - 3 * q2;
  g.four_e = four_f0(g.qstar, a) - four_x;
  return g;
}

bool conditions(const GenericSetup& g) {
  if (g.b < 1 || g.disc4 < 0 || g.four_e <= 0) return false;
  // sqrt(2 w*) >= 3  <=>  B - 9 >= 2 sqrt(disc4)
  if (g.b < 9) return false;
  return (g.b - 9) * (g.b - 9) >= 4 * g.disc4;
}

// v^2 < 2 w* = B - 2 sqrt(disc4), decided exactly.
bool below_root(const GenericSetup& g, std::int64_t v) {
  const i128 gap = g.b - static_cast<i128>(v) * v;
  return gap > 0 && gap * gap > 4 * g.disc4;
}

}  // namespace

const char* branch_name(GapBranch b) {
  switch (b) {
    case GapBranch::Representable: return "REPRESENTABLE";
    case GapBranch::Generic: return "GENERIC";
    case GapBranch::Sq2Sq2: return "SQ2_SQ2";
    case GapBranch::Scan: return "SCAN";
  }
  return "?";
}

std::optional<NormFormSolution> represent_norm_form(std::int64_t a) {
  if (a == 0) return NormFormSolution{0, 0};
  const auto bound = static_cast<std::int64_t>(std::ceil((2 + std::sqrt(3.0)) * std::sqrt(static_cast<double>(uabs(a)))));
  auto try_m = [a](std::int64_t m) -> std::optional<NormFormSolution> {
    const i128 sq = static_cast<i128>(a) + 3 * static_cast<i128>(m) * m;
    if (sq < 0) return std::nullopt;
    const auto v = static_cast<std::uint64_t>(sq);
    if (!is_square(v)) return std::nullopt;
    return NormFormSolution{static_cast<std::int64_t>(isqrt(v)), m};
  };
  for (std::int64_t m = 1; m <= bound; ++m) {
    if (auto s = try_m(m)) return s;
  }
  return try_m(0);
}

GapWitness gap_square2_square2(std::int64_t a, std::uint64_t x) {
  if (a == 0) throw std::invalid_argument("gap_square2_square2: a must be non-zero");
  if (x < 1) throw std::invalid_argument("gap_square2_square2: x must be >= 1");
  unsigned t = 0;
  std::int64_t odd = a;
  while (odd % 2 == 0) {
    odd /= 2;
    ++t;
  }
  const std::uint64_t reduced_x = x >> t;
  const std::uint64_t half = uabs(odd) / 2;
  // a' > 0: n = s^2 + ((a'-1)/2)^2; a' < 0: n = s^2 + ((|a'|+1)/2)^2.
  const std::uint64_t c = odd > 0 ? half : half + 1;
  const std::uint64_t s = least_s_above(c * c, reduced_x);
  const std::uint64_t g = s * s + c * c;
  GapWitness w{a, x, g << t, 0, GapBranch::Sq2Sq2, Sq2Params{s, t, c}};
  w.offset = w.n - x;
  verify_witness(w, SetId::square2());
  return w;
}

i128 f_vd(std::int64_t v, std::int64_t d, std::int64_t a) {
  const i128 numer = static_cast<i128>(v) * v - 3 * static_cast<i128>(d) * d - a + 1;
  if (numer % 2 != 0) throw std::invalid_argument("f_vd: v^2 - 3d^2 - a + 1 must be even");
  const i128 half = numer / 2;
  return half * half + 3 * static_cast<i128>(d) * d;
}

long double f_real(long double v, std::int64_t d, std::int64_t a) {
  const long double dd = static_cast<long double>(d);
  const long double half = (v * v - 3 * dd * dd - static_cast<long double>(a) + 1) / 2;
  return half * half + 3 * dd * dd;
}

bool generic_conditions_hold(std::int64_t a, std::uint64_t x) { return conditions(generic_setup(a, x)); }

std::uint64_t generic_x_min(std::int64_t a, std::uint64_t horizon) {
  std::uint64_t x0 = 1;
  for (std::uint64_t x = 1; x <= horizon; ++x) {
    if (!generic_conditions_hold(a, x)) x0 = x + 1;
  }
  return x0;
}

GapWitness gap_triangle_square2(std::int64_t a, std::uint64_t x) {
  if (a == 0) throw std::invalid_argument("gap_triangle_square2: a must be non-zero");
  if (x < 1) throw std::invalid_argument("gap_triangle_square2: x must be >= 1");
  if (x > (std::uint64_t{1} << 62)) throw BudgetError("gap_triangle_square2: x too large");

  if (const auto sol = represent_norm_form(a)) {
    const std::uint64_t base = 3 * static_cast<std::uint64_t>(sol->m) * static_cast<std::uint64_t>(sol->m);
    const std::uint64_t s = least_s_above(base, x);
    GapWitness w{a, x, s * s + base, 0, GapBranch::Representable, RepresentableParams{s, sol->n, sol->m}};
    w.offset = w.n - x;
    verify_witness(w, SetId::triangle());
    return w;
  }

  const GenericSetup g = generic_setup(a, x);
  if (!conditions(g)) {
    GapWitness w = scan_witness(a, x);
    verify_witness(w, SetId::triangle());
    return w;
  }
  const long double root = std::sqrt(static_cast<long double>(g.disc4));
  const long double wstar = (static_cast<long double>(g.b) - 2 * root) / 2;
  auto v = static_cast<std::int64_t>(std::sqrt(std::max<long double>(0, 2 * wstar))) + 2;
  while (v >= 0 && (!below_root(g, v) || (v - g.l1) % 2 != 0)) --v;
  if (v < 0) {
    GapWitness w = scan_witness(a, x);
    verify_witness(w, SetId::triangle());
    return w;
  }
  const i128 n = f_vd(v, g.qstar, a);
  if (n <= static_cast<i128>(x)) throw InvariantError("generic gap construction did not exceed x");
  GenericParams params{g.l1,
                       g.l2,
                       g.q,
                       g.qstar,
                       static_cast<double>(static_cast<long double>(g.four_e) / 4),
                       static_cast<double>(wstar),
                       v};
  GapWitness w{a, x, static_cast<std::uint64_t>(n), 0, GapBranch::Generic, params};
  w.offset = w.n - x;
  verify_witness(w, SetId::triangle());
  return w;
}

Rational upsilon(std::int64_t a) { return represent_norm_form(a) ? Rational(1, 2) : Rational(5, 8); }

double empirical_d(std::int64_t a, std::span<const std::uint64_t> xs) {
  if (xs.empty()) throw std::invalid_argument("empirical_d: xs must be non-empty");
  const double exponent = upsilon(a).to_double();
  double best = 0;
  for (std::uint64_t x : xs) {
    const GapWitness w = gap_triangle_square2(a, x);
    best = std::max(best, static_cast<double>(w.offset) / std::pow(static_cast<double>(x), exponent));
  }
  return best;
}

}  // namespace qfg
