/**
 * @file e_beta.hpp
 * @brief The sets E_beta: points whose j-th iterate stays within epsilon/2 of
 *        sigma^{j - a_i} t_{beta_i} for every j in [a_i, b_i].
 */
#pragma once

#include <optional>

#include "omega/scramble/params.hpp"
#include "omega/symbolic/schedule.hpp"

namespace omega::scramble {

/// Segment generator for the canonical E_beta member: block i copies
/// t_{beta_i} from index 0 onto [a_i, a_{i+1} - 1].
class EBetaStream final : public symbolic::SegmentStream {
 public:
  EBetaStream(Sequence beta, Sequence t0, Sequence t1, Index N, Index P);

  std::optional<symbolic::Segment> next() override;

  [[nodiscard]] const Sequence& beta() const noexcept { return beta_; }
  [[nodiscard]] const Sequence& t0() const noexcept { return t0_; }
  [[nodiscard]] const Sequence& t1() const noexcept { return t1_; }
  [[nodiscard]] Index N() const noexcept { return N_; }
  [[nodiscard]] Index P() const noexcept { return P_; }

 private:
  Sequence beta_;
  Sequence t0_;
  Sequence t1_;
  Index N_;
  Index P_;
  Index next_block_ = 0;
};

/// Lazily built canonical member of E_beta. Reading a block whose beta symbol
/// is not 0 or 1 throws Error{invalid_argument}.
[[nodiscard]] Sequence e_beta_witness(const Sequence& beta, const SystemParams& params);

/// Same construction from raw parts (used when re-loading descriptors).
[[nodiscard]] Sequence e_beta_witness(const Sequence& beta, const Sequence& t0, const Sequence& t1, Index N, Index P);

struct EMembershipVerdict {
  bool member = false;
  std::optional<Index> first_failing_block;
  /// min over checked (i, j) of epsilon/2 - upper bound on the distance;
  /// negative when a block fails.
  Rational margin;
  Index depth = 0;
};

/// Checks blocks 0..depth-1 with distances certified to epsilon/20; a block
/// passes when every upper bound is <= epsilon/2. Stops at the first failing
/// block. Throws Error{invalid_argument} for depth == 0.
[[nodiscard]] EMembershipVerdict is_in_E(const Sequence& x, const Sequence& beta, const SystemParams& params,
                                         Index depth);

}  // namespace omega::scramble
