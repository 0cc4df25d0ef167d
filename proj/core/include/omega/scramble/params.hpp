/**
 * @file params.hpp
 * @brief Parameter bundle for building omega-scrambled pairs in a shift space.
 *
 * Given t0, t1, s with pairwise separated orbit closures, a centre xi and a
 * radius D, epsilon is chosen with 2 epsilon below every separation, D and eta.
 * N = relaxation_time(epsilon/2) and M = relaxation_time(epsilon/8); the block
 * schedule is a_i = i (N + P), b_i = a_i + P with P > N.
 */
#pragma once

#include <optional>

#include "omega/rational.hpp"
#include "omega/symbolic/expansivity.hpp"
#include "omega/symbolic/sequence.hpp"

namespace omega::scramble {

using symbolic::Index;
using symbolic::Sequence;

struct OrbitSeparations {
  Rational t0_t1;
  Rational t0_s;
  Rational t1_s;
  bool exact = false;  // all three from closed forms over finite orbits

  [[nodiscard]] Rational min() const;
};

struct SystemParams {
  Sequence t0;
  Sequence t1;
  Sequence s;
  Sequence xi;
  Rational D;
  Rational epsilon;
  Index N = 0;
  Index P = 0;
  Index M = 0;
  symbolic::ExpansivityParams expansivity;
  OrbitSeparations separations;
  /// False when epsilon was forced past the separation bound.
  bool validated = true;

  [[nodiscard]] Index stride() const noexcept { return N + P; }
  [[nodiscard]] Index a(Index i) const noexcept { return i * stride(); }
  [[nodiscard]] Index b(Index i) const noexcept { return a(i) + P; }
  [[nodiscard]] const Sequence& t(symbolic::Symbol bit) const { return bit == 0 ? t0 : t1; }
};

struct DeriveOptions {
  std::optional<Index> P;
  /// Shifts sampled per point when an orbit is not eventually periodic.
  Index orbit_horizon = 64;
  /// Precision of sampled (non closed-form) distances.
  Rational precision = Rational(1, 1 << 12);
  /// Fault injection: use this epsilon as-is and skip the separation check.
  std::optional<Rational> epsilon_override;
};

/// inf over the orbits of x and y of d(sigma^i x, sigma^j y). Exact for
/// eventually periodic points (their orbit closures are finite); otherwise the
/// minimum of lower bounds over the first `orbit_horizon` shifts of each.
[[nodiscard]] Rational orbit_closure_distance(const Sequence& x, const Sequence& y, Index orbit_horizon,
                                              const Rational& precision, bool* exact = nullptr);

/// Largest 2^-k strictly below bound.
[[nodiscard]] Rational largest_power_of_two_below(const Rational& bound);

/// Throws Error{validation} when the orbit closures are not separated or
/// D <= 0, and Error{invalid_argument} when P <= N.
[[nodiscard]] SystemParams derive_params(const Sequence& t0, const Sequence& t1, const Sequence& s, const Sequence& xi,
                                         const Rational& D, const DeriveOptions& options = {});

/// Parameters equal in every field that affects construction.
[[nodiscard]] bool same_construction(const SystemParams& a, const SystemParams& b);

}  // namespace omega::scramble
