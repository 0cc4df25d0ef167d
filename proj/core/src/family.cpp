#include "omega/family/family.hpp"

#include <algorithm>
#include <random>

#include "omega/error.hpp"
#include "omega/symbolic/words.hpp"

namespace omega::family {
namespace {

bool squarefree(std::uint64_t m) {
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % (d * d) == 0) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t m) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

Rational circular_gap(const Rational& a, const Rational& b) {
  const Rational d = a > b ? a - b : b - a;
  return std::min<Rational>(d, 1 - d);
}

constexpr std::uint64_t kMaxRadicand = 10000;
constexpr std::size_t kMaxDraws = 20000;

}  // namespace

bool FamilyCertificate::certified() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.certified(); });
}

bool balanced(const Sequence& x, Index max_length, Index horizon) {
  const symbolic::Word w = x.take(0, horizon);
  std::vector<Index> ones(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) ones[i + 1] = ones[i] + (w[i] == 1 ? 1 : 0);
  for (Index n = 1; n <= max_length && n <= horizon; ++n) {
    Index lo = n;
    Index hi = 0;
    for (Index j = 0; j + n <= horizon; ++j) {
      const Index c = ones[j + n] - ones[j];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

MemberCertificate certify_member(const SturmianSpec& spec, const CertifyOptions& options) {
  const Sequence x = sturmian_sequence(spec);
  MemberCertificate mc;
  mc.nonperiodic = !symbolic::least_period_upto(x, options.nonperiodic_horizon).has_value();
  mc.complexity_ok = true;
  for (Index n = 1; n <= options.complexity_depth; ++n) {
    if (symbolic::factor_complexity(x, n, options.complexity_horizon) != n + 1) {
      mc.complexity_ok = false;
      break;
    }
  }
  mc.balanced = balanced(x, options.complexity_depth, options.complexity_horizon);
  return mc;
}

FamilyCertificate certify_family(std::vector<SturmianSpec> members, const Rational& separation,
                                 const CertifyOptions& options) {
  FamilyCertificate cert;
  cert.separation = separation;
  cert.options = options;
  for (const auto& spec : members) cert.checks.push_back(certify_member(spec, options));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Rational d = members[i].slope.value() - members[j].slope.value();
      cert.gaps.push_back({i, j, symbolic::exact_decimal_string(d < 0 ? Rational(-d) : d)});
    }
  }
  cert.members = std::move(members);
  return cert;
}

FamilyCertificate generate_family(std::size_t count, std::uint64_t seed, const Rational& separation,
                                  const CertifyOptions& options) {
  if (count < 2) throw Error(ErrorKind::invalid_argument, "a family needs at least 2 members");
  if (separation <= 0) throw Error(ErrorKind::invalid_argument, "separation must be positive");
  if (Rational(count) * separation > 1) {
    throw Error(ErrorKind::infeasible, std::to_string(count) + " slopes cannot be pairwise " + to_string(separation) +
                                           " apart in (0,1)");
  }
  std::mt19937_64 rng(seed);
  std::vector<SturmianSpec> picked;
  std::vector<std::uint64_t> used;
  for (std::size_t draw = 0; draw < kMaxDraws && picked.size() < count; ++draw) {
    const std::uint64_t m = 2 + rng() % (kMaxRadicand - 1);
    if (!squarefree(m) || std::find(used.begin(), used.end(), m) != used.end()) continue;
    const QuadraticSlope surd{-static_cast<std::int64_t>(isqrt(m)), 1, m, 1};
    SturmianSpec spec = spec_from_surd(surd);
    const bool clear = std::all_of(picked.begin(), picked.end(), [&](const SturmianSpec& other) {
      return circular_gap(spec.slope.value(), other.slope.value()) >= separation;
    });
    if (!clear) continue;
    used.push_back(m);
    if (!certify_member(spec, options).certified()) continue;
    picked.push_back(std::move(spec));
  }
  if (picked.size() < count) {
    throw Error(ErrorKind::infeasible, "found only " + std::to_string(picked.size()) + " of " +
                                           std::to_string(count) + " certified slopes with separation " +
                                           to_string(separation));
  }
  FamilyCertificate cert = certify_family(std::move(picked), separation, options);
  cert.seed = seed;
  return cert;
}

bool orbit_disjointness_proxy(const SturmianSpec& a, const SturmianSpec& b, Index horizon) {
  if (horizon == 0) throw Error(ErrorKind::invalid_argument, "horizon must be positive");
  if (a == b) return false;
  // A mechanical word has |#ones in [0,n) - n alpha| < 1, so each empirical
  // frequency is within 1/h of its slope and the difference within 2/h.
  const Rational bound(2, horizon);
  const Rational dalpha = a.slope.value() > b.slope.value() ? a.slope.value() - b.slope.value()
                                                            : b.slope.value() - a.slope.value();
  if (dalpha <= 4 * bound) {
    throw Error(ErrorKind::precondition, "horizon insufficient for separation (slope gap " +
                                             symbolic::exact_decimal_string(dalpha) + ", horizon " +
                                             std::to_string(horizon) + ")");
  }
  auto ones = [horizon](const SturmianSpec& spec) {
    const symbolic::Word w = sturmian_sequence(spec).take(0, horizon);
    return static_cast<Index>(std::count(w.begin(), w.end(), symbolic::Symbol{1}));
  };
  const Rational diff = Rational(ones(a)) / horizon - Rational(ones(b)) / horizon;
  return (diff < 0 ? Rational(-diff) : diff) > 3 * bound;
}

}  // namespace omega::family
