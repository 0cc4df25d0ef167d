/**
 * @file spec_pattern.hpp
 * @brief Points that follow z_0 for c_0 iterates, then M free positions,
 *        then z_1 for c_1 iterates, and so on.
 *
 * The schedule is a_0 = 0, b_i = a_i + c_i, a_{i+1} = b_i + M. Block i copies
 * z_i from index 0 onto a_i (the pre-image of z_i under sigma^{a_i} is realized
 * by direct placement).
 */
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>

#include "omega/rational.hpp"
#include "omega/spec/isp.hpp"
#include "omega/symbolic/schedule.hpp"

namespace omega::spec {

struct PatternBlock {
  Sequence z;
  Index c = 0;  // iterates followed after z itself
};

using PatternBlockSource = std::function<std::optional<PatternBlock>()>;

struct SpecPattern {
  Sequence point;
  std::shared_ptr<const symbolic::SpecSchedule> schedule;
};

/// Throws Error{precondition} when M < relaxation_time(delta) and
/// Error{invalid_argument} for an empty block stream.
[[nodiscard]] SpecPattern build_spec_pattern(PatternBlockSource blocks, Index gap, const Rational& delta,
                                             Filler filler = Filler::constant(0));

[[nodiscard]] SpecPattern build_spec_pattern(std::span<const PatternBlock> blocks, Index gap, const Rational& delta,
                                             Filler filler = Filler::constant(0));

}  // namespace omega::spec
