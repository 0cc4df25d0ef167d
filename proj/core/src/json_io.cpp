#include "omega/io/json_io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "omega/error.hpp"
#include "omega/scramble/e_beta.hpp"
#include "omega/scramble/h_beta.hpp"
#include "omega/symbolic/schedule.hpp"

namespace omega::io {

using symbolic::Alphabet;
using symbolic::Filler;
using symbolic::PeriodicTail;
using symbolic::ScheduleTail;
using symbolic::Segment;
using symbolic::SpecSchedule;
using symbolic::SturmianTail;
using symbolic::Word;

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed ") + what + ": " + e.what());
  }
}

Json alphabet_to_json(const Alphabet& a) {
  if (!a.is_finite()) return {{"kind", "naturals"}};
  return {{"kind", "finite"}, {"size", *a.size()}};
}

Alphabet alphabet_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "naturals") return Alphabet::naturals();
  if (kind == "finite") return Alphabet::finite(j.at("size").get<std::uint64_t>());
  throw Error(ErrorKind::parse, "unknown alphabet kind '" + kind + "'");
}

Json filler_to_json(const Filler& f, Index horizon) {
  if (f.is_constant()) return {{"kind", "constant"}, {"symbol", f.symbol()}};
  return {{"kind", "cyclic"}, {"source", sequence_to_json(f.source(), horizon)}};
}

Filler filler_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return Filler::constant(j.at("symbol").get<symbolic::Symbol>());
  if (kind == "cyclic") return Filler::cyclic(sequence_from_json(j.at("source")));
  throw Error(ErrorKind::parse, "unknown filler kind '" + kind + "'");
}

Json schedule_to_json(const SpecSchedule& schedule, Index horizon) {
  if (schedule.lazy()) {
    if (const auto* e = dynamic_cast<const scramble::EBetaStream*>(schedule.stream())) {
      return {{"stream",
               {{"kind", "e_beta"},
                {"beta", sequence_to_json(e->beta(), horizon)},
                {"t0", sequence_to_json(e->t0(), horizon)},
                {"t1", sequence_to_json(e->t1(), horizon)},
                {"N", e->N()},
                {"P", e->P()}}}};
    }
  }
  const std::vector<Segment> segments =
      schedule.segments_through(schedule.lazy() ? horizon : std::numeric_limits<Index>::max());
  Json sources = Json::array();
  std::map<std::string, std::size_t> seen;
  Json segs = Json::array();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    const std::optional<Index> next_a = i + 1 < segments.size() ? std::optional(segments[i + 1].a) : std::nullopt;
    const Index used = s.source_offset + (SpecSchedule::copy_end(s, next_a, schedule.window()) - s.a) + 1;
    Json src = sequence_to_json(s.source, used);
    const std::string key = src.dump();
    auto [it, fresh] = seen.emplace(key, sources.size());
    if (fresh) sources.push_back(std::move(src));
    segs.push_back({{"source", it->second}, {"offset", s.source_offset}, {"a", s.a}, {"b", s.b}});
  }
  Json out = {{"gap", schedule.gap()},
              {"window", schedule.window()},
              {"filler", filler_to_json(schedule.filler(), horizon)},
              {"sources", std::move(sources)},
              {"segments", std::move(segs)}};
  out["horizon"] = schedule.lazy() ? Json(horizon) : Json(nullptr);
  return out;
}

std::shared_ptr<const SpecSchedule> schedule_from_json(const Json& j) {
  if (j.contains("stream")) {
    const Json& s = j.at("stream");
    if (s.at("kind").get<std::string>() != "e_beta") throw Error(ErrorKind::parse, "unknown schedule stream kind");
    const Sequence w = scramble::e_beta_witness(sequence_from_json(s.at("beta")), sequence_from_json(s.at("t0")),
                                                sequence_from_json(s.at("t1")), s.at("N").get<Index>(),
                                                s.at("P").get<Index>());
    return std::get<ScheduleTail>(w.tail()).schedule;
  }
  std::vector<Sequence> sources;
  for (const auto& src : j.at("sources")) sources.push_back(sequence_from_json(src));
  std::vector<Segment> segments;
  for (const auto& seg : j.at("segments")) {
    const auto idx = seg.at("source").get<std::size_t>();
    if (idx >= sources.size()) throw Error(ErrorKind::parse, "segment source index out of range");
    segments.push_back({sources[idx], seg.at("offset").get<Index>(), seg.at("a").get<Index>(), seg.at("b").get<Index>()});
  }
  return std::make_shared<const SpecSchedule>(std::move(segments), j.at("gap").get<Index>(),
                                              j.at("window").get<Index>(), filler_from_json(j.at("filler")));
}

}  // namespace

Json sequence_to_json(const Sequence& x, Index horizon) {
  Json tail = std::visit(
      [&](const auto& t) -> Json {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, PeriodicTail>) {
          return {{"kind", "periodic"}, {"word", t.word}};
        } else if constexpr (std::is_same_v<T, SturmianTail>) {
          return {{"kind", "sturmian"},
                  {"slope", t.slope().text()},
                  {"intercept", t.intercept().text()},
                  {"offset", t.offset()}};
        } else {
          return {{"kind", "schedule"}, {"offset", t.offset}, {"schedule", schedule_to_json(*t.schedule, t.offset + horizon)}};
        }
      },
      x.tail());
  return {{"alphabet", alphabet_to_json(x.alphabet())}, {"prefix", x.prefix()}, {"tail", std::move(tail)}};
}

Sequence sequence_from_json(const Json& j) {
  return guarded("sequence descriptor", [&] {
    const Alphabet alphabet = alphabet_from_json(j.at("alphabet"));
    Word prefix = j.at("prefix").get<Word>();
    const Json& t = j.at("tail");
    const std::string kind = t.at("kind").get<std::string>();
    if (kind == "periodic") return Sequence(alphabet, std::move(prefix), PeriodicTail{t.at("word").get<Word>()});
    if (kind == "sturmian") {
      return Sequence(alphabet, std::move(prefix),
                      SturmianTail(symbolic::Decimal::parse(t.at("slope").get<std::string>()),
                                   symbolic::Decimal::parse(t.at("intercept").get<std::string>()),
                                   t.at("offset").get<Index>()));
    }
    if (kind == "schedule") {
      return Sequence(alphabet, std::move(prefix),
                      ScheduleTail{schedule_from_json(t.at("schedule")), t.at("offset").get<Index>()});
    }
    throw Error(ErrorKind::parse, "unknown tail kind '" + kind + "'");
  });
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  return guarded("rational", [&] { return parse_rational(j.get<std::string>()); });
}

Json dyadic_to_json(const Rational& r) {
  const DyadicParts parts = dyadic_parts(r);
  return {{"numerator", parts.numerator.str()}, {"pow2", parts.pow2}};
}

Rational dyadic_from_json(const Json& j) {
  return guarded("dyadic rational", [&] {
    return dyadic(parse_integer(j.at("numerator").get<std::string>()), j.at("pow2").get<std::uint64_t>());
  });
}

Json params_to_json(const scramble::SystemParams& p) {
  // Sequences in params are eventually periodic or Sturmian; no horizon needed.
  constexpr Index kNoHorizon = 0;
  return {{"t0", sequence_to_json(p.t0, kNoHorizon)},
          {"t1", sequence_to_json(p.t1, kNoHorizon)},
          {"s", sequence_to_json(p.s, kNoHorizon)},
          {"xi", sequence_to_json(p.xi, kNoHorizon)},
          {"D", dyadic_to_json(p.D)},
          {"epsilon", dyadic_to_json(p.epsilon)},
          {"N", p.N},
          {"P", p.P},
          {"M", p.M},
          {"stride", p.stride()},
          {"eta", dyadic_to_json(p.expansivity.eta)},
          {"lambda", dyadic_to_json(p.expansivity.lambda)},
          {"separations",
           {{"t0_t1", rational_to_json(p.separations.t0_t1)},
            {"t0_s", rational_to_json(p.separations.t0_s)},
            {"t1_s", rational_to_json(p.separations.t1_s)},
            {"exact", p.separations.exact}}},
          {"validated", p.validated}};
}

scramble::SystemParams params_from_json(const Json& j) {
  return guarded("params", [&] {
    scramble::SystemParams p;
    p.t0 = sequence_from_json(j.at("t0"));
    p.t1 = sequence_from_json(j.at("t1"));
    p.s = sequence_from_json(j.at("s"));
    p.xi = sequence_from_json(j.at("xi"));
    p.D = dyadic_from_json(j.at("D"));
    p.epsilon = dyadic_from_json(j.at("epsilon"));
    p.N = j.at("N").get<Index>();
    p.P = j.at("P").get<Index>();
    p.M = j.at("M").get<Index>();
    p.expansivity = {dyadic_from_json(j.at("eta")), dyadic_from_json(j.at("lambda"))};
    const Json& s = j.at("separations");
    p.separations = {rational_from_json(s.at("t0_t1")), rational_from_json(s.at("t0_s")),
                     rational_from_json(s.at("t1_s")), s.at("exact").get<bool>()};
    p.validated = j.at("validated").get<bool>();
    if (p.P <= p.N) throw Error(ErrorKind::validation, "params need P > N");
    return p;
  });
}

Json sturmian_spec_to_json(const family::SturmianSpec& spec) {
  Json out = {{"slope", spec.slope.text()}, {"intercept", spec.intercept.text()}, {"defining", nullptr}};
  if (spec.defining) {
    const auto& d = *spec.defining;
    out["defining"] = {{"p", d.p}, {"q", d.q}, {"m", d.m}, {"r", d.r}};
  }
  return out;
}

family::SturmianSpec sturmian_spec_from_json(const Json& j) {
  return guarded("Sturmian spec", [&] {
    family::SturmianSpec spec;
    spec.slope = symbolic::Decimal::parse(j.at("slope").get<std::string>());
    spec.intercept = symbolic::Decimal::parse(j.at("intercept").get<std::string>());
    if (j.contains("defining") && !j.at("defining").is_null()) {
      const Json& d = j.at("defining");
      spec.defining = family::QuadraticSlope{d.at("p").get<std::int64_t>(), d.at("q").get<std::int64_t>(),
                                             d.at("m").get<std::uint64_t>(), d.at("r").get<std::int64_t>()};
    }
    spec.validate();
    return spec;
  });
}

Json certificate_to_json(const family::FamilyCertificate& cert) {
  Json members = Json::array();
  for (std::size_t i = 0; i < cert.members.size(); ++i) {
    Json m = sturmian_spec_to_json(cert.members[i]);
    const auto& c = cert.checks.at(i);
    m["checks"] = {{"nonperiodic", c.nonperiodic}, {"complexity", c.complexity_ok}, {"balanced", c.balanced}};
    members.push_back(std::move(m));
  }
  Json gaps = Json::array();
  for (const auto& g : cert.gaps) gaps.push_back({{"i", g.i}, {"j", g.j}, {"gap", g.gap}});
  return {{"members", std::move(members)},
          {"gaps", std::move(gaps)},
          {"separation", rational_to_json(cert.separation)},
          {"seed", cert.seed},
          {"nonperiodic_horizon", cert.options.nonperiodic_horizon},
          {"complexity_horizon", cert.options.complexity_horizon},
          {"complexity_depth", cert.options.complexity_depth},
          {"certified", cert.certified()}};
}

Json recurrence_to_json(const analysis::RecurrenceParams& rp) {
  return {{"horizon", rp.horizon},
          {"late_fraction", rational_to_json(rp.late_fraction)},
          {"min_hits", rp.min_hits},
          {"origin", rp.origin}};
}

Json report_to_json(const analysis::ScrambleReport& r) {
  Json depths = Json::array();
  for (const auto& d : r.depths) {
    Json e = {{"depth", d.depth},
              {"shared_cylinder", d.shared},
              {"cylinders", {{"b", d.cylinders_b}, {"g", d.cylinders_g}}},
              {"exclusive_counts", {{"b_minus_g", d.exclusive_b}, {"g_minus_b", d.exclusive_g}}}};
    e["exclusion"] = {{"b_in_g", d.exclusion_b ? Json(*d.exclusion_b) : Json(nullptr)},
                      {"g_in_b", d.exclusion_g ? Json(*d.exclusion_g) : Json(nullptr)}};
    depths.push_back(std::move(e));
  }
  auto witness = [](const analysis::NonperiodicWitness& w) {
    Json out = {{"found", w.found}};
    if (w.found) {
      out["position"] = w.position;
      out["bits"] = symbolic::format_word(w.bits);
    }
    return out;
  };
  return {{"pair", {r.id_b, r.id_g}},
          {"depths", std::move(depths)},
          {"shared_cylinder_found", r.shared_cylinder_found()},
          {"exclusive_ok", r.exclusive_ok()},
          {"exclusion_ok", r.exclusion_ok()},
          {"nonperiodic_witness", {{"b", witness(r.nonperiodic_b)}, {"g", witness(r.nonperiodic_g)}}},
          {"passed", r.passed()},
          {"params", params_to_json(r.params)},
          {"recurrence", recurrence_to_json(r.recurrence)}};
}

Json constructed_point_to_json(const analysis::ConstructedPoint& p, Index horizon) {
  return {{"kind", "p_beta"},
          {"id", p.id},
          {"beta", sequence_to_json(p.beta, horizon)},
          {"params", params_to_json(p.params)},
          {"enumeration",
           {{"shift_depth", p.enumeration.shift_depth},
            {"orbit_depth", p.enumeration.orbit_depth},
            {"entries", p.enumeration.entries.size()},
            {"warnings", p.enumeration.warnings}}},
          {"horizon", horizon},
          {"point", sequence_to_json(p.point, horizon)}};
}

analysis::ConstructedPoint constructed_point_from_json(const Json& j, Index* horizon) {
  return guarded("constructed point", [&] {
    if (j.at("kind").get<std::string>() != "p_beta") throw Error(ErrorKind::parse, "not a p_beta point file");
    analysis::ConstructedPoint p;
    p.id = j.at("id").get<std::string>();
    p.beta = sequence_from_json(j.at("beta"));
    p.params = params_from_json(j.at("params"));
    const Json& e = j.at("enumeration");
    p.enumeration = scramble::h_beta_proxy(p.beta, p.params, e.at("shift_depth").get<Index>(),
                                           e.at("orbit_depth").get<Index>());
    p.point = sequence_from_json(j.at("point"));
    if (horizon) *horizon = j.at("horizon").get<Index>();
    return p;
  });
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
  out << dump(j);
  if (!out) throw Error(ErrorKind::io, "write to '" + path.string() + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace omega::io
