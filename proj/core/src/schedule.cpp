#include "omega/symbolic/schedule.hpp"

#include <algorithm>
#include <string>

#include "omega/error.hpp"

namespace omega::symbolic {

SpecSchedule::SpecSchedule(std::vector<Segment> segments, Index gap, Index window, Filler filler)
    : gap_(gap), window_(window), filler_(std::move(filler)), lazy_(false) {
  segments_.reserve(segments.size());
  for (auto& seg : segments) {
    validate_append(seg);
    segments_.push_back(std::move(seg));
  }
  exhausted_ = true;
}

SpecSchedule::SpecSchedule(std::unique_ptr<SegmentStream> stream, Index gap, Index window, Filler filler)
    : gap_(gap), window_(window), filler_(std::move(filler)), lazy_(true), stream_(std::move(stream)) {
  if (!stream_) throw Error(ErrorKind::invalid_argument, "null segment stream");
}

Index SpecSchedule::copy_end(const Segment& seg, std::optional<Index> next_a, Index window) noexcept {
  const Index natural = seg.b + window;
  if (!next_a) return natural;
  return std::min(natural, *next_a - 1);
}

void SpecSchedule::validate_append(const Segment& seg) const {
  if (seg.a > seg.b) {
    throw Error(ErrorKind::precondition,
                "segment interval [" + std::to_string(seg.a) + "," + std::to_string(seg.b) + "] is empty");
  }
  if (!segments_.empty()) {
    const Segment& prev = segments_.back();
    if (seg.a <= prev.b || seg.a - prev.b < gap_) {
      throw Error(ErrorKind::precondition, "gap between b=" + std::to_string(prev.b) + " and a=" +
                                               std::to_string(seg.a) + " is below the required " +
                                               std::to_string(gap_));
    }
  }
}

bool SpecSchedule::pull() const {
  if (exhausted_) return false;
  auto seg = stream_->next();
  if (!seg) {
    exhausted_ = true;
    return false;
  }
  validate_append(*seg);
  segments_.push_back(std::move(*seg));
  return true;
}

void SpecSchedule::ensure_through(Index n) const {
  while (!exhausted_ && (segments_.empty() || segments_.back().a <= n)) {
    if (!pull()) break;
  }
}

void SpecSchedule::ensure_count(std::size_t count) const {
  // One extra segment so the clipping of the last requested one is known.
  while (!exhausted_ && segments_.size() < count + 1) {
    if (!pull()) break;
  }
}

Symbol SpecSchedule::symbol_at(Index n) const {
  std::unique_lock lock(mu_);
  ensure_through(n);
  auto it = std::upper_bound(segments_.begin(), segments_.end(), n,
                             [](Index v, const Segment& s) { return v < s.a; });
  if (it == segments_.begin()) return filler_.at(n);
  const auto idx = static_cast<std::size_t>(it - segments_.begin()) - 1;
  const Segment& seg = segments_[idx];
  const std::optional<Index> next_a =
      idx + 1 < segments_.size() ? std::optional<Index>(segments_[idx + 1].a) : std::nullopt;
  const Index end = copy_end(seg, next_a, window_);
  if (n <= end) {
    const Sequence source = seg.source;
    const Index at = seg.source_offset + (n - seg.a);
    lock.unlock();
    return source.at(at);
  }
  lock.unlock();
  return filler_.at(n - (end + 1));
}

void SpecSchedule::fill(Index start, std::span<Symbol> out) const {
  if (out.empty()) return;
  const Index last = start + out.size() - 1;

  // Snapshot the segments touching [start, last] together with their copy ends.
  struct Piece {
    Segment seg;
    Index end;
  };
  std::vector<Piece> pieces;
  Index gap_origin = 0;  // first gap position preceding `start`
  {
    std::lock_guard lock(mu_);
    ensure_through(last);
    auto it = std::upper_bound(segments_.begin(), segments_.end(), start,
                               [](Index v, const Segment& s) { return v < s.a; });
    std::size_t idx = it == segments_.begin() ? 0 : static_cast<std::size_t>(it - segments_.begin()) - 1;
    for (; idx < segments_.size() && segments_[idx].a <= last; ++idx) {
      const std::optional<Index> next_a =
          idx + 1 < segments_.size() ? std::optional<Index>(segments_[idx + 1].a) : std::nullopt;
      pieces.push_back({segments_[idx], copy_end(segments_[idx], next_a, window_)});
    }
  }

  Index pos = start;
  std::size_t out_i = 0;
  std::size_t p = 0;
  while (out_i < out.size()) {
    if (p < pieces.size() && pieces[p].seg.a <= pos) {
      const Piece& pc = pieces[p];
      if (pos <= pc.end) {
        const Index stop = std::min(pc.end, last);
        const auto len = static_cast<std::size_t>(stop - pos + 1);
        pc.seg.source.fill(pc.seg.source_offset + (pos - pc.seg.a), out.subspan(out_i, len));
        out_i += len;
        pos += len;
      }
      gap_origin = pc.end + 1;
      ++p;
      continue;
    }
    // Gap run until the next piece or the end of the request.
    const Index stop = p < pieces.size() ? std::min(pieces[p].seg.a - 1, last) : last;
    for (; pos <= stop; ++pos, ++out_i) out[out_i] = filler_.at(pos - gap_origin);
  }
}

std::vector<Segment> SpecSchedule::segments_through(Index n) const {
  std::lock_guard lock(mu_);
  ensure_through(n);
  std::vector<Segment> out;
  for (const auto& s : segments_) {
    if (s.a > n) break;
    out.push_back(s);
  }
  return out;
}

std::vector<Segment> SpecSchedule::first_segments(std::size_t count) const {
  std::lock_guard lock(mu_);
  ensure_count(count);
  const std::size_t n = std::min(count, segments_.size());
  return {segments_.begin(), segments_.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace omega::symbolic
