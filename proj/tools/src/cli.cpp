#include "omega/tools/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "omega/analysis/scramble_report.hpp"
#include "omega/error.hpp"
#include "omega/family/family.hpp"
#include "omega/io/json_io.hpp"
#include "omega/report/lemma_suite.hpp"
#include "omega/report/run_config.hpp"

namespace omega::tools {
namespace {

using io::Json;
using report::RunConfig;

struct GlobalFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<symbolic::Index> horizon;
  std::string depths;
  std::string out;
  bool json = false;
};

Rational parse_amount(const std::string& text) {
  if (text.find('.') != std::string::npos) return symbolic::Decimal::parse(text).value();
  return parse_rational(text);
}

RunConfig load_config(const GlobalFlags& g) {
  RunConfig c;
  if (!g.config.empty()) c = report::config_from_json(io::read_json_file(g.config));
  if (g.seed) c.seed = *g.seed;
  if (g.horizon) c.horizon = *g.horizon;
  if (!g.depths.empty()) c.depths = report::parse_depths(g.depths);
  return c;
}

/// Writes the payload to --out, or prints it when no file was requested.
void emit(const GlobalFlags& g, const Json& payload, const Json& summary, const std::string& human,
          std::ostream& out) {
  if (g.out.empty()) {
    out << io::dump(payload);
    return;
  }
  io::write_json_file(g.out, payload);
  if (g.json) {
    out << summary.dump() << "\n";
  } else {
    out << human;
  }
}

int cmd_family(const GlobalFlags& g, std::optional<std::size_t> count, const std::string& separation,
               std::ostream& out) {
  const RunConfig c = load_config(g);
  const std::size_t n = count.value_or(c.family_size);
  const Rational sep = separation.empty() ? c.separation : parse_amount(separation);
  const auto cert = family::generate_family(n, c.seed, sep);
  std::ostringstream human;
  for (const auto& m : cert.members) human << m.slope.text() << "\n";
  human << (cert.certified() ? "certified" : "NOT certified") << " family of " << cert.members.size() << "\n";
  emit(g, io::certificate_to_json(cert),
       {{"certified", cert.certified()}, {"members", cert.members.size()}}, human.str(), out);
  return cert.certified() ? kExitPass : kExitVerificationFailure;
}

struct ConstructFlags {
  std::string instance;
  std::string preset;
  std::string slope;
  std::string intercept;
  std::string quadratic;
  std::string id;
};

family::SturmianSpec beta_spec(const ConstructFlags& f) {
  const int given = !f.preset.empty() + !f.slope.empty() + !f.quadratic.empty();
  if (given != 1) {
    throw Error(ErrorKind::invalid_argument, "construct needs exactly one of --preset, --slope, --quadratic");
  }
  if (!f.preset.empty()) return family::preset_spec(f.preset);
  if (!f.quadratic.empty()) return family::spec_from_surd(family::parse_quadratic(f.quadratic));
  family::SturmianSpec spec;
  spec.slope = symbolic::Decimal::parse(f.slope);
  spec.intercept = symbolic::Decimal::parse(f.intercept.empty() ? f.slope : f.intercept);
  spec.validate();
  return spec;
}

int cmd_construct(const GlobalFlags& g, const ConstructFlags& f, std::ostream& out) {
  RunConfig c = load_config(g);
  if (!f.instance.empty()) {
    const Json inst = io::read_json_file(f.instance);
    c = report::config_from_json(inst.contains("instance") ? inst : Json{{"instance", inst}}, c);
  }
  const family::SturmianSpec spec = beta_spec(f);
  const auto params = report::derive(c);
  const std::string id = !f.id.empty() ? f.id : !f.preset.empty() ? f.preset : "beta";
  const auto p = analysis::construct_point(id, family::sturmian_sequence(spec), params, c.shift_depth, c.orbit_depth);
  Json payload = io::constructed_point_to_json(p, c.horizon);
  payload["beta_spec"] = io::sturmian_spec_to_json(spec);
  emit(g, payload, {{"id", id}, {"horizon", c.horizon}},
       "constructed " + id + " through horizon " + std::to_string(c.horizon) + "\n", out);
  return kExitPass;
}

int cmd_verify(const GlobalFlags& g, const std::vector<std::string>& files, std::ostream& out) {
  const RunConfig c = load_config(g);
  if (files.size() < 2) throw Error(ErrorKind::invalid_argument, "verify needs at least two point files");
  std::vector<analysis::ConstructedPoint> points;
  for (const auto& path : files) {
    symbolic::Index horizon = 0;
    points.push_back(io::constructed_point_from_json(io::read_json_file(path), &horizon));
    if (horizon < c.horizon) {
      throw Error(ErrorKind::validation, "'" + path + "' is faithful only through " + std::to_string(horizon) +
                                             " symbols, below the horizon " + std::to_string(c.horizon));
    }
  }
  const auto& params = points.front().params;
  report::validate(c, params);
  const auto depths = report::resolved_depths(c, params);
  const auto rp = report::recurrence(c);

  Json reports = Json::array();
  bool all = true;
  std::ostringstream human;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto r = analysis::verify_scramble_pair(points[i], points[j], depths, rp);
      all = all && r.passed();
      reports.push_back(io::report_to_json(r));
      human << r.id_b << " / " << r.id_g << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
    }
  }
  const Json payload = {{"reports", reports},
                        {"passed", all},
                        {"depths", depths},
                        {"provenance", {{"horizon", c.horizon}, {"seed", c.seed}}}};
  emit(g, payload, {{"passed", all}, {"pairs", reports.size()}}, human.str(), out);
  return all ? kExitPass : kExitVerificationFailure;
}

int cmd_lemma_suite(const GlobalFlags& g, const std::vector<std::string>& filter, std::ostream& out) {
  const RunConfig c = load_config(g);
  const auto result = report::run_lemma_suite(c, filter);
  std::ostringstream human;
  for (const auto& v : result.verdicts) human << v.name << ": " << report::to_string(v.status) << "  " << v.detail << "\n";
  emit(g, report::suite_to_json(result, c), {{"passed", result.passed()}, {"results", report::results_json(result)}},
       human.str(), out);
  return result.passed() ? kExitPass : kExitVerificationFailure;
}

int cmd_params(const GlobalFlags& g, std::ostream& out) {
  const RunConfig c = load_config(g);
  const auto params = report::derive(c);
  report::validate(c, params);
  Json payload = io::params_to_json(params);
  payload["depths"] = report::resolved_depths(c, params);
  std::ostringstream human;
  human << "epsilon " << to_string(params.epsilon) << "  N " << params.N << "  P " << params.P << "  M " << params.M
        << "  stride " << params.stride() << "\n";
  emit(g, payload, payload, human.str(), out);
  return kExitPass;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructs and checks omega-scrambled pairs in shift spaces", "omega-scramble"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config, "JSON run configuration");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--horizon", g.horizon, "Scan and descriptor horizon");
  app.add_option("--depths", g.depths, "Comma-separated cylinder depths");
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_flag("--json", g.json, "Machine-readable summary on stdout");

  auto* family_cmd = app.add_subcommand("family", "Generate a certified Sturmian family");
  std::optional<std::size_t> count;
  std::string separation;
  family_cmd->add_option("--count", count, "Number of members");
  family_cmd->add_option("--separation", separation, "Minimum slope gap (decimal or n/d)");

  auto* construct_cmd = app.add_subcommand("construct", "Build p_beta for a Sturmian beta");
  ConstructFlags cf;
  construct_cmd->add_option("--instance", cf.instance, "Instance file with t0, t1, s, xi descriptors");
  construct_cmd->add_option("--preset", cf.preset, "fibonacci or silver");
  construct_cmd->add_option("--slope", cf.slope, "Slope as a decimal");
  construct_cmd->add_option("--intercept", cf.intercept, "Intercept as a decimal (default: slope)");
  construct_cmd->add_option("--quadratic", cf.quadratic, "Slope (p + q sqrt m)/r given as p,q,m,r");
  construct_cmd->add_option("--id", cf.id, "Identifier recorded in the point file");

  auto* verify_cmd = app.add_subcommand("verify", "Check every pair of constructed points");
  std::vector<std::string> files;
  verify_cmd->add_option("points", files, "Point files from construct")->required();

  auto* suite_cmd = app.add_subcommand("lemma-suite", "Run the per-lemma property checks");
  std::vector<std::string> filter;
  suite_cmd->add_option("--filter", filter, "Lemma names to run")->delimiter(',');

  auto* params_cmd = app.add_subcommand("params", "Print the derived parameters");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      (void)app.exit(e, out, err);
      return kExitPass;
    }
    err << error_json("usage", e.what()).dump() << "\n";
    return kExitUsage;
  }

  try {
    if (family_cmd->parsed()) return cmd_family(g, count, separation, out);
    if (construct_cmd->parsed()) return cmd_construct(g, cf, out);
    if (verify_cmd->parsed()) return cmd_verify(g, files, out);
    if (suite_cmd->parsed()) return cmd_lemma_suite(g, filter, out);
    if (params_cmd->parsed()) return cmd_params(g, out);
  } catch (const Error& e) {
    err << error_json(std::string(to_string(e.kind())), e.what()).dump() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace omega::tools
