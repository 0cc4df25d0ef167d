/**
 * @file decimal.hpp
 * @brief Non-negative decimal strings kept verbatim next to their exact value.
 *
 * Sturmian slopes and intercepts travel through JSON as decimal strings; the
 * original text is retained so descriptors round-trip byte for byte.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "omega/rational.hpp"

namespace omega::symbolic {

__extension__ using UInt128 = unsigned __int128;

class Decimal {
 public:
  Decimal() = default;

  /// Accepts "d+", "d+.d+" or ".d+". Throws Error{parse}.
  static Decimal parse(std::string_view text);

  /// Truncates a non-negative rational to `digits` fractional digits.
  static Decimal from_rational(const Rational& value, unsigned digits);

  [[nodiscard]] const std::string& text() const noexcept { return text_; }
  [[nodiscard]] const Rational& value() const noexcept { return value_; }

  /// floor(frac(value) * 2^128), with all but the top `bits` bits cleared.
  [[nodiscard]] UInt128 fraction_bits(unsigned bits) const;

  friend bool operator==(const Decimal& a, const Decimal& b) { return a.text_ == b.text_; }

 private:
  std::string text_ = "0";
  Rational value_ = 0;
};

/// Exact decimal expansion of a rational whose denominator divides a power of 10
/// (used for differences of decimals). Throws Error{invalid_argument} otherwise.
[[nodiscard]] std::string exact_decimal_string(const Rational& value);

/// Number of partial quotients a_1, a_2, ... in the continued fraction of
/// x in (0,1), stopping early after `limit` terms or when a term exceeds `cap`.
struct ContinuedFractionProbe {
  std::size_t terms = 0;
  bool terminated = false;    // expansion ended: x is the rational it spells
  bool huge_quotient = false; // a term above `cap` appeared within `limit`
};

[[nodiscard]] ContinuedFractionProbe probe_continued_fraction(const Rational& x, std::size_t limit,
                                                              const BigInt& cap);

}  // namespace omega::symbolic
