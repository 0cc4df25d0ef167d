/**
 * @file scramble_report.hpp
 * @brief Finite-depth checks that two constructed points form an
 *        omega-scrambled pair.
 *
 * For each depth K the report records whether the K-prefix of s recurs in
 * both points, the sizes of the two set differences of late-recurring
 * K-cylinders, and (when enumerations are known) whether any enumeration
 * entry of one point recurs in the other. Non-periodic content is witnessed by
 * decoding a run of stride-aligned t-blocks into a bit word with no period.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega/analysis/cylinders.hpp"
#include "omega/scramble/h_beta.hpp"
#include "omega/scramble/params.hpp"

namespace omega::analysis {

/// A point built by build_p_beta, with what is needed to rebuild its parts.
struct ConstructedPoint {
  std::string id;
  Sequence point;
  Sequence beta;
  scramble::SystemParams params;
  scramble::WitnessEnumeration enumeration;
};

/// h_beta_proxy followed by build_p_beta.
[[nodiscard]] ConstructedPoint construct_point(std::string id, const Sequence& beta,
                                               const scramble::SystemParams& params, Index shift_depth,
                                               Index orbit_depth);

/// Shortest decoded block word accepted as a non-periodic witness.
inline constexpr Index kMinWitnessBits = 8;

struct NonperiodicWitness {
  bool found = false;
  Index position = 0;  // start of the run in the point
  Word bits;           // decoded t-indices of consecutive blocks
};

struct DepthReport {
  Index depth = 0;
  bool shared = false;  // K-prefix of s recurs in both points
  std::size_t cylinders_b = 0;
  std::size_t cylinders_g = 0;
  std::size_t exclusive_b = 0;  // |omega_K(p_b) \ omega_K(p_g)|
  std::size_t exclusive_g = 0;  // |omega_K(p_g) \ omega_K(p_b)|
  std::optional<bool> exclusion_b;  // no entry of b's enumeration recurs in p_g
  std::optional<bool> exclusion_g;
};

struct ScrambleReport {
  std::string id_b;
  std::string id_g;
  std::vector<DepthReport> depths;
  NonperiodicWitness nonperiodic_b;
  NonperiodicWitness nonperiodic_g;
  scramble::SystemParams params;
  RecurrenceParams recurrence;

  [[nodiscard]] bool shared_cylinder_found() const;
  /// Counts >= 1 on both sides at every depth and non-decreasing in depth.
  [[nodiscard]] bool exclusive_ok() const;
  /// True when no exclusion check was run.
  [[nodiscard]] bool exclusion_ok() const;
  /// Shared cylinder, exclusive counts and both non-periodic witnesses. The
  /// exclusion checks are reported alongside but not folded in.
  [[nodiscard]] bool passed() const;
};

/// Decodes blocks x[j, j + stride) equal to t0 or t1 on [0, stride) and
/// returns the first late, recurring run of at least kMinWitnessBits bits with
/// no period (least_period_of).
[[nodiscard]] NonperiodicWitness find_nonperiodic_witness(std::span<const Symbol> xs,
                                                          const scramble::SystemParams& params,
                                                          const RecurrenceParams& rp);

/// True iff no entry's K-prefix recurs in xs (vacuously true when empty).
[[nodiscard]] bool verify_exclusion(std::span<const Symbol> xs, const scramble::WitnessEnumeration& enumeration,
                                    Index K, const RecurrenceParams& rp);
[[nodiscard]] bool verify_exclusion(const Sequence& p, const scramble::WitnessEnumeration& enumeration, Index K,
                                    const RecurrenceParams& rp);

struct VerifyOptions {
  /// Also run verify_exclusion in both directions at every depth.
  bool exclusion = true;
};

/// Throws Error{mismatch} unless both points were built from the same
/// parameters, and Error{invalid_argument} for an empty depth list or a depth
/// the recurrence parameters cannot support.
[[nodiscard]] ScrambleReport verify_scramble_pair(const ConstructedPoint& b, const ConstructedPoint& g,
                                                  const std::vector<Index>& depths, const RecurrenceParams& rp,
                                                  const VerifyOptions& options = {});

}  // namespace omega::analysis
