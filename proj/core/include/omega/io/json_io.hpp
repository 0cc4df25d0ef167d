/**
 * @file json_io.hpp
 * @brief JSON forms of sequences, parameters, certificates and reports.
 *
 * Sequence descriptors:
 *   {"alphabet": {"kind": "finite", "size": m} | {"kind": "naturals"},
 *    "prefix": [..],
 *    "tail": {"kind": "periodic", "word": [..]}
 *          | {"kind": "sturmian", "slope": "0.41..", "intercept": "..", "offset": k}
 *          | {"kind": "schedule", "offset": k, "schedule": {...}}}
 *
 * A schedule is either the compact E_beta stream ({"stream": {"kind": "e_beta",
 * ...}}) or an explicit segment list over deduplicated sources. Other lazy
 * schedules are written out through a horizon, recorded in the descriptor; the
 * re-loaded sequence agrees with the original on [0, horizon].
 */
#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "omega/analysis/scramble_report.hpp"
#include "omega/family/family.hpp"
#include "omega/scramble/params.hpp"

namespace omega::io {

using Json = nlohmann::json;
using symbolic::Index;
using symbolic::Sequence;

[[nodiscard]] Json sequence_to_json(const Sequence& x, Index horizon);
/// Throws Error{parse} for malformed descriptors.
[[nodiscard]] Sequence sequence_from_json(const Json& j);

/// "n" or "n/d".
[[nodiscard]] Json rational_to_json(const Rational& r);
[[nodiscard]] Rational rational_from_json(const Json& j);

/// {"numerator": "n", "pow2": k} for n / 2^k. Throws Error{validation} when r
/// is not dyadic.
[[nodiscard]] Json dyadic_to_json(const Rational& r);
[[nodiscard]] Rational dyadic_from_json(const Json& j);

[[nodiscard]] Json params_to_json(const scramble::SystemParams& params);
[[nodiscard]] scramble::SystemParams params_from_json(const Json& j);

[[nodiscard]] Json sturmian_spec_to_json(const family::SturmianSpec& spec);
[[nodiscard]] family::SturmianSpec sturmian_spec_from_json(const Json& j);

[[nodiscard]] Json certificate_to_json(const family::FamilyCertificate& cert);

[[nodiscard]] Json recurrence_to_json(const analysis::RecurrenceParams& rp);
[[nodiscard]] Json report_to_json(const analysis::ScrambleReport& report);

/// The point is written through `horizon`; beta, params and the enumeration
/// depths are enough to rebuild everything else.
[[nodiscard]] Json constructed_point_to_json(const analysis::ConstructedPoint& p, Index horizon);
/// Rebuilds the enumeration from beta and params. The returned horizon is the
/// range over which the point descriptor is faithful.
[[nodiscard]] analysis::ConstructedPoint constructed_point_from_json(const Json& j, Index* horizon = nullptr);

/// Throws Error{io} or Error{parse}.
[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
/// Writes dump(j) to path. Throws Error{io}.
void write_json_file(const std::filesystem::path& path, const Json& j);
/// Two-space indented text with a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

}  // namespace omega::io
