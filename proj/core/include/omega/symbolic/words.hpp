/**
 * @file words.hpp
 * @brief Periodicity and factor statistics over finite windows of a sequence.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "omega/symbolic/sequence.hpp"

namespace omega::symbolic {

/// Smallest p <= (w.size()-1)/2 that is a period of w, i.e. w[n] == w[n+p]
/// whenever n + p < w.size().
[[nodiscard]] std::optional<Index> least_period_of(std::span<const Symbol> w);

/// Smallest p <= horizon/2 with x_n == x_{n+p} for all n <= horizon - p.
/// Throws Error{invalid_argument} when horizon == 0.
[[nodiscard]] std::optional<Index> least_period_upto(const Sequence& x, Index horizon);

/// |{ x[j, j+n) : 0 <= j <= horizon - n }|. Requires 1 <= n <= horizon.
[[nodiscard]] std::size_t factor_complexity(const Sequence& x, Index n, Index horizon);

/// Hash/equality over word views, for counting factors without copying.
struct WordViewHash {
  std::size_t operator()(std::span<const Symbol> w) const noexcept;
};
struct WordViewEqual {
  bool operator()(std::span<const Symbol> a, std::span<const Symbol> b) const noexcept;
};

}  // namespace omega::symbolic
