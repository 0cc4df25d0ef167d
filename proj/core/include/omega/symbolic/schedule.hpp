/**
 * @file schedule.hpp
 * @brief Points assembled by specification: copied segments separated by gaps.
 *
 * Segment i copies source_i starting at source index `source_offset` onto
 * the positions [a_i, end_i] where end_i = min(b_i + window, a_{i+1} - 1).
 * Positions outside every copy region follow the filler policy. Segments may
 * come from an explicit list or from a stream that is pulled on demand.
 */
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "omega/symbolic/sequence.hpp"

namespace omega::symbolic {

struct Segment {
  Sequence source;
  Index source_offset = 0;
  Index a = 0;
  Index b = 0;
};

class SegmentStream {
 public:
  virtual ~SegmentStream() = default;
  /// Next segment, or nullopt once a finite stream is exhausted.
  virtual std::optional<Segment> next() = 0;
};

/// What uncontrolled (gap) positions hold. A cyclic filler restarts its
/// designated sequence at the first position of every gap.
class Filler {
 public:
  static Filler constant(Symbol s) { return Filler(s, std::nullopt); }
  static Filler cyclic(Sequence source) { return Filler(0, std::move(source)); }

  [[nodiscard]] bool is_constant() const noexcept { return !source_.has_value(); }
  [[nodiscard]] Symbol symbol() const noexcept { return symbol_; }
  [[nodiscard]] const Sequence& source() const { return *source_; }
  [[nodiscard]] Symbol at(Index offset_in_gap) const {
    return source_ ? source_->at(offset_in_gap) : symbol_;
  }

 private:
  Filler(Symbol s, std::optional<Sequence> src) : symbol_(s), source_(std::move(src)) {}
  Symbol symbol_ = 0;
  std::optional<Sequence> source_;
};

class SpecSchedule {
 public:
  /// Finite explicit schedule. Throws Error{precondition} on ordering or gap violations.
  SpecSchedule(std::vector<Segment> segments, Index gap, Index window, Filler filler);
  /// Lazily pulled schedule; violations surface as Error{precondition} when reached.
  SpecSchedule(std::unique_ptr<SegmentStream> stream, Index gap, Index window, Filler filler);

  SpecSchedule(const SpecSchedule&) = delete;
  SpecSchedule& operator=(const SpecSchedule&) = delete;

  [[nodiscard]] Symbol symbol_at(Index n) const;
  void fill(Index start, std::span<Symbol> out) const;

  /// Every segment with a <= n, in order.
  [[nodiscard]] std::vector<Segment> segments_through(Index n) const;
  /// The first `count` segments (fewer if the schedule is finite).
  [[nodiscard]] std::vector<Segment> first_segments(std::size_t count) const;

  [[nodiscard]] Index gap() const noexcept { return gap_; }
  [[nodiscard]] Index window() const noexcept { return window_; }
  [[nodiscard]] const Filler& filler() const noexcept { return filler_; }
  [[nodiscard]] bool lazy() const noexcept { return lazy_; }
  /// Generator behind a lazy schedule (nullptr for explicit ones). Only
  /// immutable descriptive members of the stream may be read through it.
  [[nodiscard]] const SegmentStream* stream() const noexcept { return stream_.get(); }

  [[nodiscard]] static Index copy_end(const Segment& seg, std::optional<Index> next_a, Index window) noexcept;

 private:
  void ensure_through(Index n) const;  // caller holds mu_
  void ensure_count(std::size_t count) const;  // caller holds mu_
  bool pull() const;                   // caller holds mu_
  void validate_append(const Segment& seg) const;

  Index gap_;
  Index window_;
  Filler filler_;
  bool lazy_;
  mutable std::mutex mu_;
  mutable std::vector<Segment> segments_;
  mutable std::unique_ptr<SegmentStream> stream_;
  mutable bool exhausted_ = false;
};

}  // namespace omega::symbolic
