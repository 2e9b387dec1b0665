#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "qfgaps/arith.hpp"
#include "qfgaps/rational.hpp"

namespace qfg {

/// a = n^2 - 3 m^2.
struct NormFormSolution {
  std::int64_t n;
  std::int64_t m;
  friend bool operator==(const NormFormSolution&, const NormFormSolution&) = default;
};

enum class GapBranch { Representable, Generic, Sq2Sq2, Scan };

const char* branch_name(GapBranch b);

/// n = 2^t (s^2 + c^2), n + a = 2^t (s^2 + c'^2) with a = 2^t a', a' odd.
struct Sq2Params {
  std::uint64_t s;
  unsigned t;
  std::uint64_t c;
};

/// n = s^2 + 3 m^2 and n + a = s^2 + norm_n^2.
struct RepresentableParams {
  std::uint64_t s;
  std::int64_t norm_n;
  std::int64_t norm_m;
};

/// n = f(v*, Q*) from the quartic family ((v^2 - 3d^2 - a + 1)/2)^2 + 3 d^2.
struct GenericParams {
  int l1;
  int l2;
  std::int64_t q;       // least d = l2 (mod 2) with f(0, d) > x
  std::int64_t qstar;   // q + 2
  double e;             // f(0, Q*) - x
  double wstar;         // smaller root of g_x(w) = x
  std::int64_t vstar;   // largest v = l1 (mod 2) below sqrt(2 w*)
};

struct ScanParams {
  std::uint64_t steps;
};

using GapParams = std::variant<Sq2Params, RepresentableParams, GenericParams, ScanParams>;

struct GapWitness {
  std::int64_t a = 0;
  std::uint64_t x = 0;
  std::uint64_t n = 0;
  std::uint64_t offset = 0;  // n - x, always > 0
  GapBranch branch = GapBranch::Scan;
  GapParams params;
};

/// Search over |m| <= ceil((2 + sqrt 3) sqrt|a|), least positive m first,
/// m = 0 last. Every solution class has a representative in that box after
/// reduction by the automorph (n, m) -> (2n - 3m, 2m - n).
std::optional<NormFormSolution> represent_norm_form(std::int64_t a);

/// Element of S(square2, square2, a) in (x, x + C sqrt x].
GapWitness gap_square2_square2(std::int64_t a, std::uint64_t x);

/// ((v^2 - 3 d^2 - a + 1) / 2)^2 + 3 d^2; the numerator must be even.
i128 f_vd(std::int64_t v, std::int64_t d, std::int64_t a);

/// Same expression at real v (the function h_x(y) = f(y, Q*)).
long double f_real(long double v, std::int64_t d, std::int64_t a);

/// Element of S(triangle, square2, a) above x; offset O(x^{1/2}) when a is a
/// value of n^2 - 3m^2 and O(x^{5/8}) otherwise.
GapWitness gap_triangle_square2(std::int64_t a, std::uint64_t x);

/// True when the quartic construction's side conditions hold at x
/// (real discriminant, 3Q*^2 + a - 1 >= 1, sqrt(2 w*) >= 3, f(0, Q*) > x).
bool generic_conditions_hold(std::int64_t a, std::uint64_t x);

/// Smallest x0 such that the side conditions hold for every x in [x0, horizon].
std::uint64_t generic_x_min(std::int64_t a, std::uint64_t horizon);

/// 1/2 if a is represented by n^2 - 3m^2, else 5/8.
Rational upsilon(std::int64_t a);

/// max over xs of offset / x^{upsilon(a)} for gap_triangle_square2.
double empirical_d(std::int64_t a, std::span<const std::uint64_t> xs);

}  // namespace qfg
