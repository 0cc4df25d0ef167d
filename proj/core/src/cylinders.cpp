#include "omega/analysis/cylinders.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

#include "omega/error.hpp"
#include "omega/symbolic/words.hpp"

namespace omega::analysis {

void RecurrenceParams::validate(Index K) const {
  if (late_fraction <= 0 || late_fraction >= 1) {
    throw Error(ErrorKind::invalid_argument, "late_fraction must lie strictly in (0,1)");
  }
  if (min_hits < 1) throw Error(ErrorKind::invalid_argument, "min_hits must be at least 1");
  if (K == 0) throw Error(ErrorKind::invalid_argument, "cylinder depth must be at least 1");
  if (horizon < 10 * K) {
    throw Error(ErrorKind::invalid_argument, "horizon " + std::to_string(horizon) + " is below 10 x depth " +
                                                 std::to_string(K));
  }
}

Index RecurrenceParams::late_start() const {
  const BigInt num = boost::multiprecision::numerator(late_fraction) * horizon;
  const BigInt den = boost::multiprecision::denominator(late_fraction);
  const BigInt ceil = (num + den - 1) / den;
  return origin + static_cast<Index>(ceil);
}

Word materialize(const Sequence& x, const RecurrenceParams& rp) { return x.take(0, rp.end()); }

CylinderSet omega_cylinders(std::span<const Symbol> xs, Index K, const RecurrenceParams& rp) {
  rp.validate(K);
  if (xs.size() < rp.end()) throw Error(ErrorKind::invalid_argument, "materialized window shorter than horizon");
  std::unordered_map<std::span<const Symbol>, Index, symbolic::WordViewHash, symbolic::WordViewEqual> counts;
  const Index start = rp.late_start();
  for (Index j = start; j + K <= rp.end(); ++j) ++counts[xs.subspan(j, K)];
  CylinderSet out;
  out.depth = K;
  for (const auto& [w, c] : counts) {
    if (c >= rp.min_hits) out.words.emplace(w.begin(), w.end());
  }
  return out;
}

CylinderSet omega_cylinders(const Sequence& x, Index K, const RecurrenceParams& rp) {
  rp.validate(K);
  const Word xs = materialize(x, rp);
  return omega_cylinders(xs, K, rp);
}

Index late_occurrences(std::span<const Symbol> xs, std::span<const Symbol> w, const RecurrenceParams& rp) {
  if (w.empty()) throw Error(ErrorKind::invalid_argument, "recurrence probe needs a nonempty word");
  const Index start = rp.late_start();
  const Index end = std::min<Index>(rp.end(), xs.size());
  if (start >= end) return 0;
  Index hits = 0;
  const auto hay_begin = xs.begin() + static_cast<std::ptrdiff_t>(start);
  const auto hay_end = xs.begin() + static_cast<std::ptrdiff_t>(end);
  const std::boyer_moore_horspool_searcher searcher(w.begin(), w.end());
  for (auto it = hay_begin;;) {
    auto [found, found_end] = searcher(it, hay_end);
    if (found == hay_end) break;
    ++hits;
    it = found + 1;
  }
  return hits;
}

bool recurs(std::span<const Symbol> xs, std::span<const Symbol> w, const RecurrenceParams& rp) {
  rp.validate(w.size());
  return late_occurrences(xs, w, rp) >= rp.min_hits;
}

bool recurs(const Sequence& x, std::span<const Symbol> w, const RecurrenceParams& rp) {
  rp.validate(w.size());
  const Word xs = materialize(x, rp);
  return recurs(xs, w, rp);
}

}  // namespace omega::analysis
