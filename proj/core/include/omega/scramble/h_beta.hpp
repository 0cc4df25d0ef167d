/**
 * @file h_beta.hpp
 * @brief Computable stand-in for the countable covers of H_beta.
 *
 * Entry (row n, column k) is sigma^{k (N+P)} applied to the canonical E-member
 * of sigma^{n-1} beta, i.e. a representative of G_alpha for alpha a shift of
 * beta. For recurrent beta those shifts approximate omega(beta). Entries are
 * listed along anti-diagonals: (1,0), (1,1), (2,0), (1,2), (2,1), (3,0), ...
 */
#pragma once

#include <string>
#include <vector>

#include "omega/scramble/params.hpp"

namespace omega::scramble {

struct EnumerationEntry {
  Sequence sequence;
  Index row = 1;     // >= 1; beta is shifted by row - 1
  Index column = 0;  // orbit step, in units of the block stride
};

struct WitnessEnumeration {
  std::vector<EnumerationEntry> entries;
  Index shift_depth = 0;
  Index orbit_depth = 0;
  std::vector<std::string> warnings;
};

/// Horizon used to flag periodic (hence non-generic) beta inputs.
inline constexpr Index kBetaPeriodicityHorizon = 1000;

[[nodiscard]] WitnessEnumeration h_beta_proxy(const Sequence& beta, const SystemParams& params, Index shift_depth,
                                              Index orbit_depth);

}  // namespace omega::scramble
