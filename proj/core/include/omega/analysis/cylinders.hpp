/**
 * @file cylinders.hpp
 * @brief Depth-K approximations of omega-limit sets by late recurrence.
 *
 * A word w of length K is counted when it occurs at no fewer than `min_hits`
 * positions j in the late window [origin + ceil(late_fraction * horizon),
 * origin + horizon - K]. Transients before the late window never count.
 */
#pragma once

#include <set>
#include <span>

#include "omega/rational.hpp"
#include "omega/symbolic/sequence.hpp"

namespace omega::analysis {

using symbolic::Index;
using symbolic::Sequence;
using symbolic::Symbol;
using symbolic::Word;

struct RecurrenceParams {
  Index horizon = 100000;
  Rational late_fraction = Rational(1, 2);
  Index min_hits = 3;
  /// Start of the scanned stretch; raise it by |w| to compare x with w x.
  Index origin = 0;

  /// Throws Error{invalid_argument} unless 0 < late_fraction < 1, min_hits >= 1
  /// and horizon >= 10 * K.
  void validate(Index K) const;
  [[nodiscard]] Index late_start() const;
  [[nodiscard]] Index end() const { return origin + horizon; }
};

struct CylinderSet {
  Index depth = 0;
  std::set<Word> words;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;
};

/// The symbols x[0, rp.end()), materialized once for repeated scans.
[[nodiscard]] Word materialize(const Sequence& x, const RecurrenceParams& rp);

[[nodiscard]] CylinderSet omega_cylinders(const Sequence& x, Index K, const RecurrenceParams& rp);
/// Same scan over an already materialized window (symbols from index 0).
[[nodiscard]] CylinderSet omega_cylinders(std::span<const Symbol> xs, Index K, const RecurrenceParams& rp);

/// True iff w occurs at >= min_hits late positions. Requires |w| <= horizon/10.
[[nodiscard]] bool recurs(const Sequence& x, std::span<const Symbol> w, const RecurrenceParams& rp);
[[nodiscard]] bool recurs(std::span<const Symbol> xs, std::span<const Symbol> w, const RecurrenceParams& rp);

/// Late occurrence count of w (no recurrence threshold applied).
[[nodiscard]] Index late_occurrences(std::span<const Symbol> xs, std::span<const Symbol> w,
                                     const RecurrenceParams& rp);

}  // namespace omega::analysis
