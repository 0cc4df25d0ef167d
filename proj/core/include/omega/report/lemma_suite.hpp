/**
 * @file lemma_suite.hpp
 * @brief Registry of randomized property checks, one per lemma of the
 *        construction, run on a bounded worker pool.
 *
 * Each lemma draws from its own generator seeded by (seed, registry index), so
 * results do not depend on scheduling. Failures carry the inputs that broke
 * the property as sequence descriptors.
 */
#pragma once

#include <string>
#include <vector>

#include "omega/io/json_io.hpp"
#include "omega/report/run_config.hpp"

namespace omega::report {

enum class LemmaStatus { pass, fail, skipped };

[[nodiscard]] std::string to_string(LemmaStatus s);

struct LemmaVerdict {
  std::string name;
  LemmaStatus status = LemmaStatus::skipped;
  std::string detail;
  Index checks = 0;
  io::Json counterexample;  // null unless failed
  double millis = 0;        // provenance only
};

struct SuiteResult {
  std::vector<LemmaVerdict> verdicts;
  [[nodiscard]] bool passed() const;
};

/// isp_witness, spec_pattern, closeness, e_disjointness, non_periodicity,
/// shift_invariance, separation, inclusion, exclusion, prepend, density.
[[nodiscard]] const std::vector<std::string>& lemma_names();

/// Runs the lemmas named in `filter` (all when empty), in registry order.
/// Throws Error{invalid_argument} for unknown names, and propagates parameter
/// derivation and config validation errors.
[[nodiscard]] SuiteResult run_lemma_suite(const RunConfig& config, const std::vector<std::string>& filter = {});

/// Verdicts only; byte-stable for a fixed config.
[[nodiscard]] io::Json results_json(const SuiteResult& result);
/// {"results": ..., "config": ..., "provenance": {"timing_ms": ...}}.
[[nodiscard]] io::Json suite_to_json(const SuiteResult& result, const RunConfig& config);

}  // namespace omega::report
