#include "omega/symbolic/metric.hpp"

#include <algorithm>
#include <numeric>

#include "omega/error.hpp"

namespace omega::symbolic {

Index terms_for_precision(const Rational& precision) {
  if (precision <= 0) throw Error(ErrorKind::invalid_argument, "distance precision must be positive");
  Index k = 1;
  Rational bound = 1;  // 2^{1-k}
  while (bound > precision) {
    bound /= 2;
    ++k;
  }
  return k;
}

Rational prefix_distance(std::span<const Symbol> x, std::span<const Symbol> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n == 0) return 0;
  BigInt num = 0;
  for (std::size_t i = 0; i < n; ++i) {
    num <<= 1;
    num += symbol_gap(x[i], y[i]);
  }
  return dyadic(num, n - 1);
}

DistanceEstimate dist(const Sequence& x, const Sequence& y, const Rational& precision) {
  const Index k = terms_for_precision(precision);
  const Word xs = x.take(0, k);
  const Word ys = y.take(0, k);
  return DistanceEstimate{prefix_distance(xs, ys), pow2_inv(k - 1), k};
}

std::optional<Rational> dist_exact(const Sequence& x, const Sequence& y, Index max_span) {
  const auto* px = std::get_if<PeriodicTail>(&x.tail());
  const auto* py = std::get_if<PeriodicTail>(&y.tail());
  if (px == nullptr || py == nullptr) return std::nullopt;
  const Index transient = std::max(x.prefix().size(), y.prefix().size());
  const Index period = std::lcm(px->word.size(), py->word.size());
  if (transient + period > max_span) return std::nullopt;

  const Word xs = x.take(0, transient + period);
  const Word ys = y.take(0, transient + period);
  const Rational head = prefix_distance(std::span(xs).first(transient), std::span(ys).first(transient));

  BigInt cycle = 0;  // sum_i c_{L+i} 2^{T-i}
  for (Index i = 0; i < period; ++i) {
    cycle <<= 1;
    cycle += symbol_gap(xs[transient + i], ys[transient + i]);
  }
  cycle <<= 1;
  BigInt den = (BigInt(1) << static_cast<unsigned>(period)) - 1;
  den <<= static_cast<unsigned>(transient);
  return head + Rational(cycle, den);
}

DistanceEstimate dist_certified(const Sequence& x, const Sequence& y, const Rational& precision) {
  if (auto exact = dist_exact(x, y)) return DistanceEstimate{*exact, 0, 0};
  return dist(x, y, precision);
}

}  // namespace omega::symbolic
