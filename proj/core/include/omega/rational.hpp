/**
 * @file rational.hpp
 * @brief Exact arithmetic used for every distance and threshold.
 *
 * Distances in the shift metric are sums of powers of two, so the dyadic
 * rationals are closed under everything the library computes except the
 * closed-form value of eventually periodic series, which needs a general
 * rational denominator 2^T - 1.
 */
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace omega {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^-k.
[[nodiscard]] Rational pow2_inv(std::uint64_t k);

/// num / 2^pow2.
[[nodiscard]] Rational dyadic(const BigInt& num, std::uint64_t pow2);

/// Numerator/exponent pair of a dyadic rational, normalized so the
/// numerator is odd unless the value is an integer.
struct DyadicParts {
  BigInt numerator;
  std::uint64_t pow2 = 0;
};

[[nodiscard]] bool is_dyadic(const Rational& r);

/// Throws Error{validation} when r is not dyadic.
[[nodiscard]] DyadicParts dyadic_parts(const Rational& r);

/// "num/den" or "num" for integers.
[[nodiscard]] std::string to_string(const Rational& r);

/// Parses an optionally signed decimal integer. Throws Error{parse}.
[[nodiscard]] BigInt parse_integer(const std::string& text);

/// Parses "a", "a/b" (b > 0). Throws Error{parse}.
[[nodiscard]] Rational parse_rational(const std::string& text);

[[nodiscard]] double to_double(const Rational& r);

}  // namespace omega
