/**
 * @file sturmian.hpp
 * @brief Sturmian (mechanical) words with quadratic irrational slopes.
 *
 * x_n = floor((n+1) alpha + rho) - floor(n alpha + rho). Slopes are stored as
 * decimal strings truncated from an exact quadratic surd (p + q sqrt(m)) / r,
 * so every consumer sees the same digits and the surd can be re-derived.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "omega/rational.hpp"
#include "omega/symbolic/decimal.hpp"
#include "omega/symbolic/sequence.hpp"

namespace omega::family {

using symbolic::Decimal;
using symbolic::Index;
using symbolic::Sequence;

/// Fractional digits kept when a surd is written out as a decimal.
inline constexpr unsigned kSlopeDigits = 40;

/// (p + q sqrt(m)) / r with r > 0 and m not a perfect square.
struct QuadraticSlope {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::uint64_t m = 2;
  std::int64_t r = 1;

  /// floor(value * 10^digits), exact. Throws Error{invalid_argument} when
  /// r <= 0, q == 0 or m is a perfect square.
  [[nodiscard]] BigInt scaled_floor(unsigned digits) const;
  [[nodiscard]] Decimal to_decimal(unsigned digits = kSlopeDigits) const;

  friend bool operator==(const QuadraticSlope&, const QuadraticSlope&) = default;
};

struct SturmianSpec {
  Decimal slope;
  Decimal intercept;
  std::optional<QuadraticSlope> defining;

  /// Throws Error{validation} for slopes outside (0,1), intercepts outside
  /// [0,1), or slopes that look rational (see SturmianTail).
  void validate() const;

  friend bool operator==(const SturmianSpec& a, const SturmianSpec& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
};

/// Spec with intercept equal to the slope, the convention used for every
/// generated member.
[[nodiscard]] SturmianSpec spec_from_surd(const QuadraticSlope& surd);

/// alpha = (3 - sqrt 5)/2, rho = alpha: the Fibonacci word 0100101001001...
[[nodiscard]] SturmianSpec fibonacci_spec();
/// alpha = sqrt 2 - 1, rho = alpha.
[[nodiscard]] SturmianSpec silver_spec();
/// Looks up "fibonacci" or "silver". Throws Error{invalid_argument}.
[[nodiscard]] SturmianSpec preset_spec(const std::string& name);

/// Parses "p,q,m,r" as (p + q sqrt m)/r. Throws Error{parse}.
[[nodiscard]] QuadraticSlope parse_quadratic(const std::string& text);

/// Binary sequence of the spec. Throws Error{validation} like validate().
[[nodiscard]] Sequence sturmian_sequence(const SturmianSpec& spec);

}  // namespace omega::family
