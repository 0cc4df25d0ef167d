/**
 * @file p_beta.hpp
 * @brief The point p_beta whose omega-limit set contains H_beta and s.
 *
 * Block stream (gaps M, closeness epsilon/8):
 *   xi for 0 iterates,
 *   then for n = 1, 2, ...: entry e_n followed for b_{row(e_n)} iterates,
 *                           s followed for n - 1 iterates.
 * The finite enumeration is revisited cyclically so every entry recurs.
 */
#pragma once

#include "omega/scramble/h_beta.hpp"
#include "omega/spec/spec_pattern.hpp"

namespace omega::scramble {

/// Block stream of p_beta (exposed so the pattern can be rebuilt independently).
[[nodiscard]] spec::PatternBlockSource p_beta_blocks(const SystemParams& params, const WitnessEnumeration& enumeration);

/// Throws Error{invalid_argument} for an empty enumeration.
[[nodiscard]] spec::SpecPattern build_p_beta(const Sequence& beta, const SystemParams& params,
                                             const WitnessEnumeration& enumeration);

}  // namespace omega::scramble
