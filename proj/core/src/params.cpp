#include "omega/scramble/params.hpp"

#include <algorithm>

#include "omega/error.hpp"
#include "omega/spec/relaxation.hpp"
#include "omega/symbolic/metric.hpp"

namespace omega::scramble {

using symbolic::PeriodicTail;

Rational OrbitSeparations::min() const { return std::min({t0_t1, t0_s, t1_s}); }

namespace {

Index orbit_samples(const Sequence& x, Index orbit_horizon) {
  if (const auto* p = std::get_if<PeriodicTail>(&x.tail())) return x.prefix().size() + p->word.size();
  return orbit_horizon;
}

}  // namespace

Rational orbit_closure_distance(const Sequence& x, const Sequence& y, Index orbit_horizon, const Rational& precision,
                                bool* exact) {
  const Index nx = orbit_samples(x, orbit_horizon);
  const Index ny = orbit_samples(y, orbit_horizon);
  bool all_exact = true;
  std::optional<Rational> best;
  for (Index i = 0; i < nx; ++i) {
    const Sequence xi = x.shifted(i);
    for (Index j = 0; j < ny; ++j) {
      const auto d = symbolic::dist_certified(xi, y.shifted(j), precision);
      all_exact = all_exact && d.exact();
      if (!best || d.value < *best) best = d.value;
    }
  }
  if (exact != nullptr) *exact = all_exact;
  return *best;
}

Rational largest_power_of_two_below(const Rational& bound) {
  if (bound <= 0) throw Error(ErrorKind::invalid_argument, "bound must be positive");
  Rational p = 1;
  while (p >= bound) p /= 2;
  while (p * 2 < bound) p *= 2;
  return p;
}

SystemParams derive_params(const Sequence& t0, const Sequence& t1, const Sequence& s, const Sequence& xi,
                           const Rational& D, const DeriveOptions& options) {
  if (D <= 0) throw Error(ErrorKind::validation, "neighbourhood radius D must be positive");
  for (const Sequence* p : {&t0, &t1, &s, &xi}) {
    if (!p->alphabet().supports_shift_space()) {
      throw Error(ErrorKind::validation, "shift-space instances need an alphabet with at least two symbols");
    }
  }

  SystemParams params{t0, t1, s, xi, D, 0, 0, 0, 0, symbolic::shift_expansivity(), {}, true};
  bool e01 = false, e0s = false, e1s = false;
  params.separations.t0_t1 = orbit_closure_distance(t0, t1, options.orbit_horizon, options.precision, &e01);
  params.separations.t0_s = orbit_closure_distance(t0, s, options.orbit_horizon, options.precision, &e0s);
  params.separations.t1_s = orbit_closure_distance(t1, s, options.orbit_horizon, options.precision, &e1s);
  params.separations.exact = e01 && e0s && e1s;

  const Rational bound = std::min({params.separations.min(), D, params.expansivity.eta}) / 2;
  if (options.epsilon_override) {
    if (*options.epsilon_override <= 0) throw Error(ErrorKind::invalid_argument, "epsilon must be positive");
    params.epsilon = *options.epsilon_override;
    params.validated = 2 * params.epsilon < std::min({params.separations.min(), D, params.expansivity.eta});
  } else {
    if (params.separations.min() <= 0) {
      throw Error(ErrorKind::validation, "orbit closures of t0, t1, s are not separated at the tested precision");
    }
    params.epsilon = largest_power_of_two_below(bound);
  }

  params.N = spec::relaxation_time(params.epsilon / 2);
  params.M = spec::relaxation_time(params.epsilon / 8);
  params.P = options.P.value_or(params.N + 3);
  if (params.P <= params.N) {
    throw Error(ErrorKind::invalid_argument, "block length P must exceed the window N=" + std::to_string(params.N));
  }
  return params;
}

bool same_construction(const SystemParams& a, const SystemParams& b) {
  if (a.epsilon != b.epsilon || a.D != b.D || a.N != b.N || a.P != b.P || a.M != b.M ||
      !(a.expansivity == b.expansivity)) {
    return false;
  }
  constexpr Index probe = 512;
  const auto same = [](const Sequence& x, const Sequence& y) {
    return x.alphabet() == y.alphabet() && x.take(0, probe) == y.take(0, probe);
  };
  return same(a.t0, b.t0) && same(a.t1, b.t1) && same(a.s, b.s) && same(a.xi, b.xi);
}

}  // namespace omega::scramble
