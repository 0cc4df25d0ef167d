#include "omega/spec/spec_pattern.hpp"

#include <string>
#include <vector>

#include "omega/error.hpp"
#include "omega/spec/relaxation.hpp"

namespace omega::spec {

using symbolic::Segment;
using symbolic::SpecSchedule;

namespace {

class PatternStream final : public symbolic::SegmentStream {
 public:
  PatternStream(PatternBlock first, PatternBlockSource rest, Index gap)
      : pending_(std::move(first)), rest_(std::move(rest)), gap_(gap) {}

  std::optional<Segment> next() override {
    std::optional<PatternBlock> block;
    if (pending_) {
      block = std::move(pending_);
      pending_.reset();
    } else {
      block = rest_();
    }
    if (!block) return std::nullopt;
    const Index a = next_a_;
    const Index b = a + block->c;
    next_a_ = b + gap_;
    return Segment{std::move(block->z), 0, a, b};
  }

 private:
  std::optional<PatternBlock> pending_;
  PatternBlockSource rest_;
  Index gap_;
  Index next_a_ = 0;
};

}  // namespace

SpecPattern build_spec_pattern(PatternBlockSource blocks, Index gap, const Rational& delta, Filler filler) {
  const Index window = relaxation_time(delta);
  if (gap < window) {
    throw Error(ErrorKind::precondition, "pattern gap M=" + std::to_string(gap) + " is below the relaxation time " +
                                             std::to_string(window));
  }
  if (!blocks) throw Error(ErrorKind::invalid_argument, "null pattern block source");
  auto first = blocks();
  if (!first) throw Error(ErrorKind::invalid_argument, "spec pattern needs at least one block");
  const auto alphabet = first->z.alphabet();
  auto stream = std::make_unique<PatternStream>(std::move(*first), std::move(blocks), gap);
  auto schedule = std::make_shared<const SpecSchedule>(std::move(stream), gap, window, std::move(filler));
  return SpecPattern{Sequence(alphabet, {}, symbolic::ScheduleTail{schedule, 0}), schedule};
}

SpecPattern build_spec_pattern(std::span<const PatternBlock> blocks, Index gap, const Rational& delta,
                               Filler filler) {
  auto list = std::make_shared<std::vector<PatternBlock>>(blocks.begin(), blocks.end());
  auto pos = std::make_shared<std::size_t>(0);
  PatternBlockSource source = [list, pos]() -> std::optional<PatternBlock> {
    if (*pos == list->size()) return std::nullopt;
    return (*list)[(*pos)++];
  };
  return build_spec_pattern(std::move(source), gap, delta, std::move(filler));
}

}  // namespace omega::spec
