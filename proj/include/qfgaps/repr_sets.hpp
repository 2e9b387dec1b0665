#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qfg {

enum class SetTag { Square2, Triangle, TriangleStar, Diamond };

/// Identifies one of the representable sets: sums of two squares, x^2+xy+y^2,
/// c^2+3d^2, or ideal norms of the quadratic field of discriminant D.
struct SetId {
  SetTag tag = SetTag::Square2;
  std::int64_t discriminant = 0;  // Diamond only

  static SetId square2() { return {SetTag::Square2, 0}; }
  static SetId triangle() { return {SetTag::Triangle, 0}; }
  static SetId triangle_star() { return {SetTag::TriangleStar, 0}; }
  /// Throws unless D is a fundamental discriminant.
  static SetId diamond(std::int64_t d);
  /// "square2", "triangle", "triangle_star", "diamond:D".
  static SetId parse(std::string_view text);

  std::string name() const;

  friend bool operator==(const SetId&, const SetId&) = default;
};

enum class ReprMode { Formula, Enumerate };

/// Number of (x, y) in Z^2 with x^2 + y^2 = n, n >= 1.
std::uint64_t r2(std::uint64_t n, ReprMode mode = ReprMode::Formula);

/// Number of (x, y) in Z^2 with x^2 + xy + y^2 = n, n >= 1.
std::uint64_t R2(std::uint64_t n, ReprMode mode = ReprMode::Formula);

/// Number of ideals of norm n in the quadratic field of discriminant D.
std::uint64_t ideal_count(std::uint64_t n, std::int64_t discriminant);

/// 0 belongs to the three form-sets and not to Diamond sets.
bool is_member(const SetId& set, std::uint64_t n);

/// Bit n - lo set iff n is in the set, for n in [lo, hi]. Window length is
/// limited to 10^9; work is chunked.
std::vector<bool> sieve_members(const SetId& set, std::uint64_t lo, std::uint64_t hi);

inline constexpr std::uint64_t kMaxWindow = 1'000'000'000;

}  // namespace qfg
