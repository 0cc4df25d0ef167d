/**
 * @file expansivity.hpp
 * @brief Expansivity constants of the shift and the per-step expansion check.
 */
#pragma once

#include <optional>

#include "omega/rational.hpp"
#include "omega/symbolic/sequence.hpp"

namespace omega::symbolic {

struct ExpansivityParams {
  Rational eta;     // 0 < eta
  Rational lambda;  // 1 < lambda

  /// Throws Error{invalid_argument} unless 0 < eta and 1 < lambda.
  void validate() const;
  friend bool operator==(const ExpansivityParams&, const ExpansivityParams&) = default;
};

/// eta = 1, lambda = 2. The shift doubles distances below 1 exactly, so the
/// expansion inequality is used in its non-strict form at lambda = 2.
[[nodiscard]] ExpansivityParams shift_expansivity();

/// True iff 0 < d(x,y) < eta implies d(sigma x, sigma y) >= lambda d(x,y)
/// within `precision`. When both distances have closed forms the check is
/// exact, and for eta = 1 it also checks
/// d(sigma x, sigma y) = 2 d(x,y) - 2 min{|x_0 - y_0|, 1}.
[[nodiscard]] bool check_expansive_step(const Sequence& x, const Sequence& y, const ExpansivityParams& params,
                                        const Rational& precision);

/// The exact identity d(sigma x, sigma y) = 2 d(x,y) - 2 min{|x_0 - y_0|,1};
/// nullopt when no closed form is available.
[[nodiscard]] std::optional<bool> shift_doubling_identity(const Sequence& x, const Sequence& y);

}  // namespace omega::symbolic
