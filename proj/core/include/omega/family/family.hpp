/**
 * @file family.hpp
 * @brief Certified families of Sturmian words with separated slopes.
 *
 * Distinct slopes give distinct letter frequencies, hence disjoint orbit
 * closures; each closure is an uncountable minimal set. Certification checks
 * the finite signatures of that: no period up to a horizon, factor complexity
 * n + 1 and balance.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omega/family/sturmian.hpp"

namespace omega::family {

struct CertifyOptions {
  Index nonperiodic_horizon = 1000;
  Index complexity_horizon = 10000;
  Index complexity_depth = 12;
};

struct MemberCertificate {
  bool nonperiodic = false;
  bool complexity_ok = false;  // p(n) = n + 1 for 1 <= n <= complexity_depth
  bool balanced = false;       // equal-length factors differ by <= 1 in 1-count
  [[nodiscard]] bool certified() const { return nonperiodic && complexity_ok && balanced; }
};

struct PairGap {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string gap;  // |alpha_i - alpha_j| as an exact decimal string
};

struct FamilyCertificate {
  std::vector<SturmianSpec> members;
  std::vector<MemberCertificate> checks;
  std::vector<PairGap> gaps;
  Rational separation;
  std::uint64_t seed = 0;
  CertifyOptions options;

  [[nodiscard]] bool certified() const;
};

/// Non-periodicity to the horizon, complexity and balance for one member.
/// Sound but incomplete: a Sturmian prefix whose length falls just past a
/// continued-fraction denominator q can still have period q, so some slopes
/// are rejected at some horizons.
[[nodiscard]] MemberCertificate certify_member(const SturmianSpec& spec, const CertifyOptions& options = {});

/// Runs the per-member checks and the pairwise gap table. The separation floor
/// is recorded but not enforced here.
[[nodiscard]] FamilyCertificate certify_family(std::vector<SturmianSpec> members, const Rational& separation,
                                               const CertifyOptions& options = {});

/// True iff factors of equal length n <= max_length inside [0, horizon) have
/// 1-counts differing by at most 1.
[[nodiscard]] bool balanced(const Sequence& x, Index max_length, Index horizon);

/// Draws `count` slopes frac(sqrt m) for squarefree m in [2, 10^4] with
/// circular gaps |alpha - beta| mod 1 >= separation, skipping draws that fail
/// certify_member.
/// Throws Error{invalid_argument} for count < 2 or separation <= 0, and
/// Error{infeasible} when count * separation > 1 or the search is exhausted.
[[nodiscard]] FamilyCertificate generate_family(std::size_t count, std::uint64_t seed, const Rational& separation,
                                                const CertifyOptions& options = {});

/// True iff the empirical 1-frequencies over [0, horizon) differ by more than
/// three times the error bound of their difference (2 / horizon). Identical
/// specs give false. Throws Error{precondition} "horizon insufficient for
/// separation" when the slopes are too close for the horizon to resolve.
[[nodiscard]] bool orbit_disjointness_proxy(const SturmianSpec& a, const SturmianSpec& b, Index horizon);

}  // namespace omega::family
