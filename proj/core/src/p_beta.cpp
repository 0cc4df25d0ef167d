#include "omega/scramble/p_beta.hpp"

#include <memory>

#include "omega/error.hpp"
#include "omega/scramble/e_beta.hpp"

namespace omega::scramble {

spec::PatternBlockSource p_beta_blocks(const SystemParams& params, const WitnessEnumeration& enumeration) {
  if (enumeration.entries.empty()) throw Error(ErrorKind::invalid_argument, "p_beta needs a nonempty enumeration");
  struct State {
    std::vector<EnumerationEntry> entries;
    Sequence xi;
    Sequence s;
    Index stride;
    Index P;
    Index step = 0;  // 0: xi; odd: entry; even > 0: s-visit
  };
  auto st = std::make_shared<State>(State{enumeration.entries, params.xi, params.s, params.stride(), params.P});
  return [st]() -> std::optional<spec::PatternBlock> {
    const Index step = st->step++;
    if (step == 0) return spec::PatternBlock{st->xi, 0};
    const Index n = (step + 1) / 2;  // 1-based visit number
    if (step % 2 == 1) {
      const auto& e = st->entries[(n - 1) % st->entries.size()];
      return spec::PatternBlock{e.sequence, e.row * st->stride + st->P};
    }
    return spec::PatternBlock{st->s, n - 1};
  };
}

spec::SpecPattern build_p_beta(const Sequence& beta, const SystemParams& params,
                               const WitnessEnumeration& enumeration) {
  for (const auto& e : enumeration.entries) {
    if (e.row != 1 || e.column != 0) continue;
    const Index probe = 4 * params.stride();
    if (e.sequence.take(0, probe) != e_beta_witness(beta, params).take(0, probe)) {
      throw Error(ErrorKind::mismatch, "enumeration was not derived from this beta");
    }
  }
  return spec::build_spec_pattern(p_beta_blocks(params, enumeration), params.M, params.epsilon / 8);
}

}  // namespace omega::scramble
