/**
 * @file isp.hpp
 * @brief Witnesses for the (infinite) specification property on shift spaces.
 *
 * Target x_i is copied at its own indices onto [a_i, min(b_i + N, a_{i+1} - 1)],
 * N = relaxation_time(delta), so every j in [a_i, b_i] sees at least N agreeing
 * symbols and dist(sigma^j y, sigma^j x_i) < delta.
 */
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "omega/rational.hpp"
#include "omega/symbolic/schedule.hpp"

namespace omega::spec {

using symbolic::Filler;
using symbolic::Index;
using symbolic::Sequence;

struct SpecInterval {
  Index a = 0;
  Index b = 0;
  friend bool operator==(const SpecInterval&, const SpecInterval&) = default;
};

struct IspBlock {
  Sequence target;
  SpecInterval interval;
};

/// Lazily consumed countable stream of targets; nullopt ends a finite stream.
using IspBlockSource = std::function<std::optional<IspBlock>()>;

/// Finite list form. Throws Error{invalid_argument} for an empty or
/// mismatched list and Error{precondition} when a_{i+1} - b_i < N.
[[nodiscard]] Sequence build_isp_witness(std::span<const Sequence> targets, std::span<const SpecInterval> intervals,
                                         const Rational& delta, Filler filler = Filler::constant(0));

/// Stream form. The first block is pulled eagerly (an empty stream is an
/// error); later gap violations surface when the offending block is reached.
[[nodiscard]] Sequence build_isp_witness(IspBlockSource blocks, const Rational& delta,
                                         Filler filler = Filler::constant(0));

}  // namespace omega::spec
