#include "omega/symbolic/words.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "omega/error.hpp"

namespace omega::symbolic {

std::optional<Index> least_period_of(std::span<const Symbol> w) {
  const std::size_t len = w.size();
  if (len < 2) return std::nullopt;
  // Prefix function: the smallest period is len - (longest proper border).
  std::vector<std::size_t> pi(len, 0);
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  const std::size_t period = len - pi[len - 1];
  if (period <= (len - 1) / 2) return period;
  return std::nullopt;
}

std::optional<Index> least_period_upto(const Sequence& x, Index horizon) {
  if (horizon == 0) throw Error(ErrorKind::invalid_argument, "least_period_upto needs horizon >= 1");
  const Word w = x.take(0, horizon + 1);
  return least_period_of(w);
}

std::size_t WordViewHash::operator()(std::span<const Symbol> w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w) {
    h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool WordViewEqual::operator()(std::span<const Symbol> a, std::span<const Symbol> b) const noexcept {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t factor_complexity(const Sequence& x, Index n, Index horizon) {
  if (n == 0 || n > horizon) throw Error(ErrorKind::invalid_argument, "factor_complexity needs 1 <= n <= horizon");
  const Word w = x.take(0, horizon);
  std::unordered_set<std::span<const Symbol>, WordViewHash, WordViewEqual> seen;
  for (Index j = 0; j + n <= horizon; ++j) seen.insert(std::span<const Symbol>(w).subspan(j, n));
  return seen.size();
}

}  // namespace omega::symbolic
