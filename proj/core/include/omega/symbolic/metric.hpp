/**
 * @file metric.hpp
 * @brief The shift metric d(x,y) = sum_i min{|x_i - y_i|, 1} / 2^i.
 */
#pragma once

#include <optional>

#include "omega/rational.hpp"
#include "omega/symbolic/sequence.hpp"

namespace omega::symbolic {

/// A certified enclosure: the true distance lies in [value, value + tail_bound].
struct DistanceEstimate {
  Rational value;
  Rational tail_bound;
  Index terms = 0;  // number of explicit series terms summed (0 for closed forms)

  [[nodiscard]] Rational upper() const { return value + tail_bound; }
  [[nodiscard]] bool exact() const { return tail_bound == 0; }
};

/// min{|a - b|, 1}.
[[nodiscard]] constexpr Symbol symbol_gap(Symbol a, Symbol b) noexcept {
  const Symbol diff = a > b ? a - b : b - a;
  return diff < 1 ? diff : 1;
}

/// Smallest K >= 1 with 2^{1-K} <= precision.
[[nodiscard]] Index terms_for_precision(const Rational& precision);

/// Sums the first K terms, K = terms_for_precision(precision); the dropped tail
/// is at most 2^{1-K}. Throws Error{invalid_argument} for precision <= 0.
[[nodiscard]] DistanceEstimate dist(const Sequence& x, const Sequence& y, const Rational& precision);

/// Closed form for two eventually periodic sequences, when the combined
/// transient plus period stays below `max_span` symbols.
[[nodiscard]] std::optional<Rational> dist_exact(const Sequence& x, const Sequence& y,
                                                 Index max_span = 1 << 13);

/// Exact value when available, truncated enclosure otherwise.
[[nodiscard]] DistanceEstimate dist_certified(const Sequence& x, const Sequence& y, const Rational& precision);

/// Distance between the first `depth` symbols only (tail assumed equal).
[[nodiscard]] Rational prefix_distance(std::span<const Symbol> x, std::span<const Symbol> y);

}  // namespace omega::symbolic
