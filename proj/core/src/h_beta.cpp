#include "omega/scramble/h_beta.hpp"

#include "omega/error.hpp"
#include "omega/scramble/e_beta.hpp"
#include "omega/symbolic/words.hpp"

namespace omega::scramble {

WitnessEnumeration h_beta_proxy(const Sequence& beta, const SystemParams& params, Index shift_depth,
                                Index orbit_depth) {
  WitnessEnumeration out;
  out.shift_depth = shift_depth;
  out.orbit_depth = orbit_depth;
  if (shift_depth == 0 || orbit_depth == 0) return out;

  if (auto p = symbolic::least_period_upto(beta, kBetaPeriodicityHorizon)) {
    out.warnings.push_back("beta has period " + std::to_string(*p) + " up to horizon " +
                           std::to_string(kBetaPeriodicityHorizon) + "; its E-sets contain periodic points");
  }

  std::vector<Sequence> witnesses;
  witnesses.reserve(shift_depth);
  for (Index k = 0; k < shift_depth; ++k) witnesses.push_back(e_beta_witness(beta.shifted(k), params));

  // Anti-diagonal d holds (row, column) with row + column = d, row = 1..d.
  for (Index d = 1; out.entries.size() < shift_depth * orbit_depth; ++d) {
    for (Index row = 1; row <= d; ++row) {
      const Index column = d - row;
      if (row > shift_depth || column >= orbit_depth) continue;
      out.entries.push_back({witnesses[row - 1].shifted(column * params.stride()), row, column});
    }
  }
  return out;
}

}  // namespace omega::scramble
