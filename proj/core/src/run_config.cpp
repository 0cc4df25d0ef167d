#include "omega/report/run_config.hpp"

#include <algorithm>
#include <sstream>

#include "omega/error.hpp"

namespace omega::report {

using symbolic::parse_word;

Instance default_instance() {
  return {"default", Sequence::constant(0), Sequence::constant(1), Sequence::periodic(parse_word("01")),
          Sequence::periodic(parse_word("011"))};
}

namespace {

Rational dyadic_string(const io::Json& j, const char* key) {
  const Rational r = parse_rational(j.get<std::string>());
  if (!is_dyadic(r)) throw Error(ErrorKind::validation, std::string(key) + " must be a dyadic rational");
  return r;
}

}  // namespace

RunConfig config_from_json(const io::Json& j, RunConfig base) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "config must be a JSON object");
  static const char* const kKeys[] = {"instance",     "D",         "P",          "epsilon",    "depths",
                                      "horizon",      "late_fraction", "min_hits", "family_size", "separation",
                                      "seed",         "shift_depth",   "orbit_depth", "workers"};
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(std::begin(kKeys), std::end(kKeys), [&](const char* k) { return key == k; })) {
      throw Error(ErrorKind::parse, "unknown config key '" + key + "'");
    }
  }
  try {
    RunConfig c = std::move(base);
    if (j.contains("instance")) {
      const io::Json& inst = j.at("instance");
      if (inst.is_string()) {
        if (inst.get<std::string>() != "default") {
          throw Error(ErrorKind::validation, "unknown instance preset '" + inst.get<std::string>() + "'");
        }
        c.instance = default_instance();
      } else {
        c.instance = {inst.value("name", std::string("custom")), io::sequence_from_json(inst.at("t0")),
                      io::sequence_from_json(inst.at("t1")), io::sequence_from_json(inst.at("s")),
                      io::sequence_from_json(inst.at("xi"))};
      }
    }
    if (j.contains("D")) c.D = dyadic_string(j.at("D"), "D");
    if (j.contains("P")) c.P = j.at("P").get<Index>();
    if (j.contains("epsilon")) c.epsilon = dyadic_string(j.at("epsilon"), "epsilon");
    if (j.contains("depths")) c.depths = j.at("depths").get<std::vector<Index>>();
    if (j.contains("horizon")) c.horizon = j.at("horizon").get<Index>();
    if (j.contains("late_fraction")) c.late_fraction = parse_rational(j.at("late_fraction").get<std::string>());
    if (j.contains("min_hits")) c.min_hits = j.at("min_hits").get<Index>();
    if (j.contains("family_size")) c.family_size = j.at("family_size").get<std::size_t>();
    if (j.contains("separation")) c.separation = parse_rational(j.at("separation").get<std::string>());
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("shift_depth")) c.shift_depth = j.at("shift_depth").get<Index>();
    if (j.contains("orbit_depth")) c.orbit_depth = j.at("orbit_depth").get<Index>();
    if (j.contains("workers")) c.workers = std::max<std::size_t>(1, j.at("workers").get<std::size_t>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed config: ") + e.what());
  }
}

io::Json config_to_json(const RunConfig& c) {
  io::Json inst = "default";
  if (c.instance.name != "default") {
    inst = {{"name", c.instance.name},
            {"t0", io::sequence_to_json(c.instance.t0, 0)},
            {"t1", io::sequence_to_json(c.instance.t1, 0)},
            {"s", io::sequence_to_json(c.instance.s, 0)},
            {"xi", io::sequence_to_json(c.instance.xi, 0)}};
  }
  io::Json out = {{"instance", inst},
                  {"D", to_string(c.D)},
                  {"depths", c.depths},
                  {"horizon", c.horizon},
                  {"late_fraction", to_string(c.late_fraction)},
                  {"min_hits", c.min_hits},
                  {"family_size", c.family_size},
                  {"separation", to_string(c.separation)},
                  {"seed", c.seed},
                  {"shift_depth", c.shift_depth},
                  {"orbit_depth", c.orbit_depth},
                  {"workers", c.workers}};
  if (c.P) out["P"] = *c.P;
  if (c.epsilon) out["epsilon"] = to_string(*c.epsilon);
  return out;
}

scramble::SystemParams derive(const RunConfig& c) {
  scramble::DeriveOptions opts;
  opts.P = c.P;
  opts.epsilon_override = c.epsilon;
  return scramble::derive_params(c.instance.t0, c.instance.t1, c.instance.s, c.instance.xi, c.D, opts);
}

std::vector<Index> resolved_depths(const RunConfig& c, const scramble::SystemParams& params) {
  if (!c.depths.empty()) return c.depths;
  return {3 * params.stride(), 6 * params.stride()};
}

analysis::RecurrenceParams recurrence(const RunConfig& c) {
  analysis::RecurrenceParams rp;
  rp.horizon = c.horizon;
  rp.late_fraction = c.late_fraction;
  rp.min_hits = c.min_hits;
  return rp;
}

void validate(const RunConfig& c, const scramble::SystemParams& params) {
  if (!is_dyadic(c.D)) throw Error(ErrorKind::validation, "D must be a dyadic rational");
  const auto depths = resolved_depths(c, params);
  if (std::any_of(depths.begin(), depths.end(), [](Index k) { return k == 0; })) {
    throw Error(ErrorKind::validation, "depths must be positive");
  }
  const Index deepest = *std::max_element(depths.begin(), depths.end());
  const BigInt needed = BigInt(10) * deepest * params.stride();
  if (BigInt(c.horizon) < needed) {
    throw Error(ErrorKind::validation, "horizon " + std::to_string(c.horizon) + " is below 10 x depth " +
                                           std::to_string(deepest) + " x stride " + std::to_string(params.stride()) +
                                           " = " + needed.str());
  }
  try {
    recurrence(c).validate(deepest);
  } catch (const Error& e) {
    throw Error(ErrorKind::validation, e.what());
  }
}

std::vector<Index> parse_depths(const std::string& csv) {
  std::vector<Index> out;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::parse, "depths must be a comma-separated list of positive integers: '" + csv + "'");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw Error(ErrorKind::parse, "empty depth list");
  return out;
}

}  // namespace omega::report
