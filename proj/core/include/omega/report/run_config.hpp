/**
 * @file run_config.hpp
 * @brief Run configuration shared by the command-line driver and the suite.
 *
 * Config files are JSON objects; every key is optional:
 *   {"instance": "default" | {"t0": SEQ, "t1": SEQ, "s": SEQ, "xi": SEQ},
 *    "D": "1", "P": 8, "epsilon": "1/4", "depths": [39, 78],
 *    "horizon": 100000, "late_fraction": "1/2", "min_hits": 3,
 *    "family_size": 2, "separation": "1/100", "seed": 7,
 *    "shift_depth": 8, "orbit_depth": 4, "workers": 4}
 * Rationals are strings "n" or "n/d"; D and epsilon must be dyadic.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omega/analysis/cylinders.hpp"
#include "omega/io/json_io.hpp"
#include "omega/scramble/params.hpp"

namespace omega::report {

using symbolic::Index;
using symbolic::Sequence;

struct Instance {
  std::string name = "default";
  Sequence t0;
  Sequence t1;
  Sequence s;
  Sequence xi;
};

/// t0 = 0^omega, t1 = 1^omega, s = (01)^omega, xi = (011)^omega.
[[nodiscard]] Instance default_instance();

struct RunConfig {
  Instance instance = default_instance();
  Rational D = 1;
  std::optional<Index> P;
  /// Fault injection: force epsilon past the separation bound.
  std::optional<Rational> epsilon;
  /// Empty means 3 and 6 block strides.
  std::vector<Index> depths;
  Index horizon = 100000;
  Rational late_fraction = Rational(1, 2);
  Index min_hits = 3;
  std::size_t family_size = 2;
  Rational separation = Rational(1, 100);
  std::uint64_t seed = 7;
  Index shift_depth = 8;
  Index orbit_depth = 4;
  std::size_t workers = 4;
};

/// Overlays the keys present in j onto base. Throws Error{parse} or
/// Error{validation}.
[[nodiscard]] RunConfig config_from_json(const io::Json& j, RunConfig base = {});
[[nodiscard]] io::Json config_to_json(const RunConfig& config);

/// derive_params on the configured instance.
[[nodiscard]] scramble::SystemParams derive(const RunConfig& config);

/// The configured depths, or {3, 6} x stride.
[[nodiscard]] std::vector<Index> resolved_depths(const RunConfig& config, const scramble::SystemParams& params);

[[nodiscard]] analysis::RecurrenceParams recurrence(const RunConfig& config);

/// Throws Error{validation} unless horizon >= 10 x max depth x (N + P), every
/// depth is positive and D is dyadic.
void validate(const RunConfig& config, const scramble::SystemParams& params);

/// Parses "13,26" into depths. Throws Error{parse}.
[[nodiscard]] std::vector<Index> parse_depths(const std::string& csv);

}  // namespace omega::report
