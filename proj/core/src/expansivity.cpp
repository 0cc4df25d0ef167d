#include "omega/symbolic/expansivity.hpp"

#include "omega/error.hpp"
#include "omega/symbolic/metric.hpp"

namespace omega::symbolic {

void ExpansivityParams::validate() const {
  if (eta <= 0) throw Error(ErrorKind::invalid_argument, "expansivity eta must be positive");
  if (lambda <= 1) throw Error(ErrorKind::invalid_argument, "expansivity lambda must exceed 1");
}

ExpansivityParams shift_expansivity() { return ExpansivityParams{Rational(1), Rational(2)}; }

std::optional<bool> shift_doubling_identity(const Sequence& x, const Sequence& y) {
  const auto d = dist_exact(x, y);
  const auto ds = dist_exact(x.shifted(1), y.shifted(1));
  if (!d || !ds) return std::nullopt;
  return *ds == 2 * *d - 2 * Rational(symbol_gap(x.at(0), y.at(0)));
}

bool check_expansive_step(const Sequence& x, const Sequence& y, const ExpansivityParams& params,
                          const Rational& precision) {
  params.validate();
  const auto d = dist_certified(x, y, precision);
  const auto ds = dist_certified(x.shifted(1), y.shifted(1), precision);

  if (d.exact() && ds.exact()) {
    if (d.value == 0 || d.value >= params.eta) return true;
    if (params.eta == 1) {
      if (auto identity = shift_doubling_identity(x, y); identity && !*identity) return false;
    }
    return ds.value >= params.lambda * d.value;
  }
  // Guard: only pairs certainly inside (0, eta) are constrained.
  if (d.upper() == 0 || d.value >= params.eta) return true;
  return ds.upper() + precision >= params.lambda * d.value;
}

}  // namespace omega::symbolic
