#include "omega/spec/isp.hpp"

#include <memory>

#include "omega/error.hpp"
#include "omega/spec/relaxation.hpp"

namespace omega::spec {

using symbolic::Segment;
using symbolic::SpecSchedule;

namespace {

class IspStream final : public symbolic::SegmentStream {
 public:
  IspStream(IspBlock first, IspBlockSource rest) : pending_(std::move(first)), rest_(std::move(rest)) {}

  std::optional<Segment> next() override {
    std::optional<IspBlock> block;
    if (pending_) {
      block = std::move(pending_);
      pending_.reset();
    } else {
      block = rest_();
    }
    if (!block) return std::nullopt;
    return Segment{block->target, block->interval.a, block->interval.a, block->interval.b};
  }

 private:
  std::optional<IspBlock> pending_;
  IspBlockSource rest_;
};

}  // namespace

Sequence build_isp_witness(std::span<const Sequence> targets, std::span<const SpecInterval> intervals,
                           const Rational& delta, Filler filler) {
  if (targets.empty()) throw Error(ErrorKind::invalid_argument, "ISP witness needs at least one target");
  if (targets.size() != intervals.size()) {
    throw Error(ErrorKind::invalid_argument, "ISP witness needs one interval per target");
  }
  const Index window = relaxation_time(delta);
  std::vector<Segment> segs;
  segs.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    segs.push_back(Segment{targets[i], intervals[i].a, intervals[i].a, intervals[i].b});
  }
  auto schedule = std::make_shared<const SpecSchedule>(std::move(segs), window, window, std::move(filler));
  return Sequence(targets.front().alphabet(), {}, symbolic::ScheduleTail{std::move(schedule), 0});
}

Sequence build_isp_witness(IspBlockSource blocks, const Rational& delta, Filler filler) {
  if (!blocks) throw Error(ErrorKind::invalid_argument, "null ISP block source");
  auto first = blocks();
  if (!first) throw Error(ErrorKind::invalid_argument, "ISP witness needs at least one target");
  const Index window = relaxation_time(delta);
  const auto alphabet = first->target.alphabet();
  auto stream = std::make_unique<IspStream>(std::move(*first), std::move(blocks));
  auto schedule = std::make_shared<const SpecSchedule>(std::move(stream), window, window, std::move(filler));
  return Sequence(alphabet, {}, symbolic::ScheduleTail{std::move(schedule), 0});
}

}  // namespace omega::spec
