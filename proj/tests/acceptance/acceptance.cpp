/**
 * @file acceptance.cpp
 * @brief Acceptance checks: one PASS/FAIL line per criterion, each with a
 *        pinned runtime budget. Exits non-zero when any criterion fails.
 */
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "omega/analysis/cylinders.hpp"
#include "omega/analysis/scramble_report.hpp"
#include "omega/family/family.hpp"
#include "omega/report/lemma_suite.hpp"
#include "omega/report/run_config.hpp"
#include "omega/scramble/e_beta.hpp"
#include "omega/scramble/p_beta.hpp"
#include "omega/spec/isp.hpp"
#include "omega/spec/relaxation.hpp"
#include "omega/symbolic/expansivity.hpp"
#include "omega/symbolic/metric.hpp"
#include "omega/symbolic/words.hpp"
#include "omega/tools/cli.hpp"
#include "oracles.hpp"

namespace {

using namespace omega;
using analysis::RecurrenceParams;
using symbolic::Index;
using symbolic::parse_word;
using symbolic::Sequence;
using symbolic::Word;
using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Runtime budgets, seconds.
constexpr double kBudgetMetric = 5;
constexpr double kBudgetIsp = 10;
constexpr double kBudgetEBeta = 10;
constexpr double kBudgetNonperiodic = 30;
constexpr double kBudgetPipeline = 60;
constexpr double kBudgetPrepend = 30;
constexpr double kBudgetFault = 5;

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double budget;  // 0 means no runtime bound
  std::function<Outcome()> body;
};

scramble::SystemParams default_params() {
  return scramble::derive_params(Sequence::constant(0), Sequence::constant(1), Sequence::periodic(parse_word("01")),
                                 Sequence::periodic(parse_word("011")), Rational(1));
}

void info(const std::string& line) { std::cout << "  info: " << line << "\n"; }

// 1. Shift doubling on random pairs and the closeness bound.
Outcome metric_suite() {
  oracle::Rng rng(kSeed);
  Outcome out;
  Index doubled = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Sequence x = Sequence::periodic({0}, rng.word(64));
    Word yp = rng.word(64);
    // Half the pairs share their first symbols so that d < 1 is exercised often.
    if (trial % 2 == 0) {
      const Index agree = rng.between(1, 63);
      const Word xp = x.take(0, agree);
      std::copy(xp.begin(), xp.end(), yp.begin());
    }
    const Sequence y = Sequence::periodic({0}, yp);
    const Rational d = oracle::partial_distance(x.take(0, 64), y.take(0, 64));
    const Rational ds = oracle::partial_distance(x.take(1, 64), y.take(1, 64));
    if (d < 1) {
      ++doubled;
      if (ds != 2 * d || *symbolic::dist_exact(shift(x, 1), shift(y, 1)) != 2 * *symbolic::dist_exact(x, y)) {
        out.ok = false;
      }
    }
    if (symbolic::shift_doubling_identity(x, y) != std::optional<bool>(true)) out.ok = false;
  }
  Index closeness = 0;
  for (Index j = 0; j <= 40; ++j) {
    for (int trial = 0; trial < 25; ++trial) {
      Word common = rng.word(j + 1);
      Word xp = common;
      Word yp = common;
      const Word xr = rng.word(64);
      const Word yr = rng.word(64);
      xp.insert(xp.end(), xr.begin(), xr.end());
      yp.insert(yp.end(), yr.begin(), yr.end());
      const Sequence p = Sequence::periodic({0}, xp);
      const Sequence q = Sequence::periodic({1}, yp);
      for (Index i = 0; i <= j; ++i) {
        if (!(*symbolic::dist_exact(shift(p, i), shift(q, i)) < 1)) out.ok = false;
      }
      if (!(*symbolic::dist_exact(p, q) <= pow2_inv(j))) out.ok = false;
      ++closeness;
    }
  }
  out.detail = std::to_string(doubled) + " pairs with d<1 doubled exactly, " + std::to_string(closeness) +
               " closeness pairs (j<=40)";
  return out;
}

// 2. ISP witness soundness with certified precision delta/10.
Outcome isp_suite() {
  oracle::Rng rng(kSeed + 1);
  Outcome out;
  Index checked = 0;
  for (int inst = 0; inst < 100; ++inst) {
    const Rational delta = pow2_inv(rng.between(1, 8));
    const Index N = spec::relaxation_time(delta);
    const bool lazy = inst % 2 == 1;
    const std::size_t blocks = lazy ? 50 : rng.between(1, 8);
    std::vector<Sequence> targets;
    std::vector<spec::SpecInterval> intervals;
    Index a = rng.below(5);
    for (std::size_t i = 0; i < blocks; ++i) {
      const Index b = a + rng.below(10);
      targets.push_back(Sequence::periodic(rng.nonempty_word(6), rng.word(rng.below(5))));
      intervals.push_back({a, b});
      a = b + N + rng.below(3);
    }
    Sequence w;
    if (lazy) {
      // Unbounded stream; the first 50 blocks are checked.
      auto next = std::make_shared<std::size_t>(0);
      const auto t = targets;
      const auto iv = intervals;
      const Index tail_step = N + 11;
      w = spec::build_isp_witness(
          [next, t, iv, tail_step]() -> std::optional<spec::IspBlock> {
            const std::size_t i = (*next)++;
            if (i < t.size()) return spec::IspBlock{t[i], iv[i]};
            const Index start = iv.back().b + tail_step * (i - t.size() + 1);
            return spec::IspBlock{Sequence::constant(i % 2), {start, start + 10}};
          },
          delta);
    } else {
      w = spec::build_isp_witness(targets, intervals, delta);
    }
    for (std::size_t i = 0; i < blocks; ++i) {
      for (Index j = intervals[i].a; j <= intervals[i].b; ++j) {
        const auto e = symbolic::dist_certified(w.shifted(j), targets[i].shifted(j), delta / 10);
        if (!(e.upper() < delta)) out.ok = false;
        ++checked;
      }
    }
  }
  out.detail = "100 instances (50 lazy, 50 blocks each), " + std::to_string(checked) + " controlled indices";
  return out;
}

// 3. E_beta membership, cross-membership and shift invariance.
Outcome e_beta_suite() {
  const auto p = default_params();
  Outcome out;
  if (p.epsilon != Rational(1, 4) || p.N != 5 || p.P != 8) {
    return {false, "default parameters differ from epsilon=1/4, N=5, P=8"};
  }
  oracle::Rng rng(kSeed + 2);
  const auto random_beta = [&rng] { return Sequence::periodic(rng.nonempty_word(17), rng.word(rng.below(9))); };
  for (int k = 0; k < 20; ++k) {
    const Sequence beta = random_beta();
    if (!scramble::is_in_E(scramble::e_beta_witness(beta, p), beta, p, 50).member) out.ok = false;
  }
  for (int pair = 0; pair < 100; ++pair) {
    const Sequence beta = random_beta();
    Word g = beta.take(0, 64);
    const Index flip = rng.below(10);
    g[flip] ^= 1;
    for (Index i = flip + 1; i < 10; ++i) {
      if (rng.below(3) == 0) g[i] ^= 1;
    }
    const Sequence gamma = Sequence::periodic(rng.nonempty_word(5), g);
    const auto v = scramble::is_in_E(scramble::e_beta_witness(gamma, p), beta, p, 50);
    if (v.member || v.first_failing_block != std::optional<Index>(flip)) out.ok = false;
  }
  for (int k = 0; k < 5; ++k) {
    const Sequence beta = random_beta();
    const Sequence w = scramble::e_beta_witness(beta, p);
    for (Index s = 0; s <= 20; ++s) {
      if (!scramble::is_in_E(w.shifted(s * p.stride()), beta.shifted(s), p, 50).member) out.ok = false;
    }
  }
  out.detail = "20 witnesses at depth 50, 100 cross pairs, shift k<=20 for 5 beta";
  return out;
}

// 4. Non-periodicity of E_beta witnesses for ten Sturmian beta.
Outcome nonperiodic_suite() {
  const auto p = default_params();
  std::vector<std::pair<std::string, family::SturmianSpec>> betas{{"fibonacci", family::fibonacci_spec()},
                                                                  {"silver", family::silver_spec()}};
  const auto fam = family::generate_family(8, kSeed, Rational(1, 100));
  for (const auto& m : fam.members) betas.emplace_back("sqrt" + std::to_string(m.defining->m), m);

  constexpr Index kHorizon = 10000;
  Outcome out;
  std::ostringstream periods;
  Index periodic = 0;
  for (const auto& [name, spec] : betas) {
    const Sequence beta = family::sturmian_sequence(spec);
    const auto period = symbolic::least_period_upto(scramble::e_beta_witness(beta, p), kHorizon);
    if (period) {
      ++periodic;
      out.ok = false;
      // The witness inherits any period of the beta prefix it encodes, scaled by the stride.
      const auto beta_period = symbolic::least_period_upto(beta, (kHorizon + 1) / p.stride() - 1);
      periods << " " << name << ":" << *period << (beta_period ? "=13*" + std::to_string(*beta_period) : "");
    }
    const Word w = beta.take(0, kHorizon);
    for (Index n = 1; n <= 12; ++n) {
      const auto fs = oracle::factors(w, n);
      if (fs.size() != n + 1) out.ok = false;
      Index lo = n;
      Index hi = 0;
      for (const auto& f : fs) {
        Index ones = 0;
        for (const auto s : f) ones += s;
        lo = std::min(lo, ones);
        hi = std::max(hi, ones);
      }
      if (hi - lo > 1) out.ok = false;
    }
  }
  out.detail = std::to_string(betas.size() - periodic) + "/" + std::to_string(betas.size()) +
               " witnesses aperiodic to 10^4; complexity n+1 and balance checked for n<=12";
  if (periodic > 0) out.detail += "; periods found:" + periods.str();
  return out;
}

// 5. Scrambled-pair pipeline for silver and Fibonacci slopes.
Outcome pipeline_suite() {
  const auto p = default_params();
  const auto b = analysis::construct_point("silver", family::sturmian_sequence(family::silver_spec()), p, 8, 4);
  const auto g = analysis::construct_point("fibonacci", family::sturmian_sequence(family::fibonacci_spec()), p, 8, 4);
  RecurrenceParams rp;
  rp.horizon = 100000;
  const auto r = analysis::verify_scramble_pair(b, g, {13, 26}, rp);

  Outcome out;
  out.ok = r.shared_cylinder_found() && r.exclusive_ok() && r.exclusion_ok();
  std::ostringstream d;
  d << "shared=" << (r.shared_cylinder_found() ? "yes" : "no");
  for (const auto& dr : r.depths) {
    d << "; K=" << dr.depth << " exclusive " << dr.exclusive_b << "/" << dr.exclusive_g << " exclusion "
      << (dr.exclusion_b.value_or(false) ? "yes" : "no") << "/" << (dr.exclusion_g.value_or(false) ? "yes" : "no");
  }
  out.detail = d.str();

  // Deeper depths, for reference only; they do not affect the verdict.
  const auto deep = analysis::verify_scramble_pair(b, g, {39, 78, 130, 234}, rp);
  for (const auto& dr : deep.depths) {
    std::ostringstream line;
    line << "K=" << dr.depth << " exclusive " << dr.exclusive_b << "/" << dr.exclusive_g << ", exclusion "
         << (dr.exclusion_b.value_or(false) ? "yes" : "no") << "/" << (dr.exclusion_g.value_or(false) ? "yes" : "no");
    info(line.str());
  }
  return out;
}

// 6. Prepending keeps the cylinders; p_beta starts near xi.
Outcome prepend_suite() {
  const auto p = default_params();
  const auto point =
      analysis::construct_point("fibonacci", family::sturmian_sequence(family::fibonacci_spec()), p, 8, 4);
  RecurrenceParams rp;
  rp.horizon = 100000;
  oracle::Rng rng(kSeed + 5);
  Outcome out;
  const Word base = analysis::materialize(point.point, rp);
  const auto c2 = analysis::omega_cylinders(base, 2, rp);
  const auto c13 = analysis::omega_cylinders(base, 13, rp);
  for (int k = 0; k < 20; ++k) {
    const Word w = rng.word(rng.between(0, 20));
    RecurrenceParams shifted = rp;
    shifted.origin = w.size();
    const Word xs = analysis::materialize(prepend(w, point.point), shifted);
    if (analysis::omega_cylinders(xs, 2, shifted) != c2) out.ok = false;
    if (analysis::omega_cylinders(xs, 13, shifted) != c13) out.ok = false;
  }
  const std::vector<Sequence> xis{Sequence::periodic(parse_word("011")), Sequence::periodic(parse_word("001")),
                                  Sequence::periodic(parse_word("0110")), Sequence::periodic(parse_word("00111")),
                                  family::sturmian_sequence(family::silver_spec())};
  for (const auto& xi : xis) {
    const auto q = scramble::derive_params(p.t0, p.t1, p.s, xi, p.D);
    const auto pat = scramble::build_p_beta(point.beta, q, point.enumeration);
    const auto e = symbolic::dist_certified(pat.point, xi, q.epsilon / 80);
    if (!(e.upper() < q.epsilon / 8)) out.ok = false;
  }
  out.detail = "20 words at depths 2 and 13, 5 xi within epsilon/8";
  return out;
}

int cli(const std::vector<std::string>& args, std::string& out_text) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tools::run_cli(args, out, err);
  out_text = out.str();
  return code;
}

// 7. Fault injection is caught with a counterexample and exit code 1.
Outcome fault_suite() {
  const auto dir = std::filesystem::temp_directory_path() / "omega_acceptance";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "fault.json";
  {
    std::ofstream f(cfg);
    f << R"({"epsilon": "4"})";
  }
  std::string text;
  const int code = cli({"lemma-suite", "--config", cfg.string(), "--filter", "e_disjointness"}, text);
  std::filesystem::remove_all(dir);
  const Json j = Json::parse(text);
  const Json& v = j["results"][0];
  Outcome out;
  out.ok = code == tools::kExitVerificationFailure && v["status"] == "fail" && !v["counterexample"].is_null();
  out.detail = "exit " + std::to_string(code) + ", status " + v["status"].get<std::string>();
  return out;
}

// 8. Two suite runs with the same seed give identical result payloads.
Outcome determinism_suite() {
  std::string first;
  std::string second;
  const int c1 = cli({"lemma-suite", "--seed", "7"}, first);
  const int c2 = cli({"lemma-suite", "--seed", "7"}, second);
  const std::string r1 = Json::parse(first)["results"].dump();
  const std::string r2 = Json::parse(second)["results"].dump();
  Outcome out;
  out.ok = r1 == r2 && c1 == c2;
  out.detail = std::to_string(r1.size()) + " byte payloads, exit codes " + std::to_string(c1) + "/" +
               std::to_string(c2);
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "metric and expansivity", kBudgetMetric, metric_suite},
      {2, "ISP witness soundness", kBudgetIsp, isp_suite},
      {3, "E_beta membership", kBudgetEBeta, e_beta_suite},
      {4, "non-periodicity", kBudgetNonperiodic, nonperiodic_suite},
      {5, "scrambled-pair pipeline at depths 13, 26", kBudgetPipeline, pipeline_suite},
      {6, "prepend and density", kBudgetPrepend, prepend_suite},
      {7, "fault detection", kBudgetFault, fault_suite},
      {8, "determinism", 0, determinism_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_budget = c.budget == 0 || secs < c.budget;
    const bool pass = o.ok && in_budget;
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << o.detail
              << "; " << timing << (c.budget > 0 ? " of " + std::to_string(static_cast<int>(c.budget)) + "s" : "")
              << (in_budget ? "" : ", over budget") << ")\n";
    std::cout.flush();
  }
  return failures == 0 ? 0 : 1;
}
