#include "omega/report/lemma_suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <string_view>
#include <thread>
#include <unordered_set>

#include "omega/analysis/scramble_report.hpp"
#include "omega/error.hpp"
#include "omega/family/family.hpp"
#include "omega/scramble/e_beta.hpp"
#include "omega/spec/isp.hpp"
#include "omega/spec/relaxation.hpp"
#include "omega/spec/spec_pattern.hpp"
#include "omega/symbolic/expansivity.hpp"
#include "omega/symbolic/metric.hpp"
#include "omega/symbolic/words.hpp"

namespace omega::report {

using symbolic::Symbol;
using symbolic::Word;

namespace {

struct Outcome {
  LemmaStatus status = LemmaStatus::pass;
  std::string detail;
  io::Json counterexample;
};

Outcome pass(std::string detail) { return {LemmaStatus::pass, std::move(detail), nullptr}; }
Outcome fail(std::string detail, io::Json payload) { return {LemmaStatus::fail, std::move(detail), std::move(payload)}; }
Outcome skip(std::string reason) { return {LemmaStatus::skipped, std::move(reason), nullptr}; }

struct Context {
  const RunConfig& config;
  const scramble::SystemParams& params;
  std::mt19937_64 rng;
  Index checks = 0;

  std::uint64_t below(std::uint64_t n) { return rng() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  Word random_word(std::size_t length) {
    Word w(length);
    for (auto& s : w) s = below(2);
    return w;
  }
  Sequence random_periodic(std::size_t max_period) { return Sequence::periodic(random_word(between(1, max_period))); }
};

io::Json describe(const Sequence& x, Index horizon) { return io::sequence_to_json(x, horizon); }

Sequence silver() { return family::sturmian_sequence(family::silver_spec()); }
Sequence fibonacci() { return family::sturmian_sequence(family::fibonacci_spec()); }

/// Smallest L such that beta[m, m + L) is not a factor of chi[0, horizon) for
/// every m <= max_start.
std::optional<Index> divergence_length(const Sequence& beta, const Sequence& chi, Index max_start, Index horizon) {
  const Word c = chi.take(0, horizon);
  const Word b = beta.take(0, max_start + 128);
  for (Index L = 1; L <= 64; ++L) {
    std::unordered_set<std::span<const Symbol>, symbolic::WordViewHash, symbolic::WordViewEqual> factors;
    for (Index j = 0; j + L <= c.size(); ++j) factors.insert(std::span(c).subspan(j, L));
    bool all_absent = true;
    for (Index m = 0; m <= max_start && all_absent; ++m) {
      all_absent = !factors.contains(std::span(b).subspan(m, L));
    }
    if (all_absent) return L;
  }
  return std::nullopt;
}

// Copies of each target at its own indices keep every controlled iterate
// within delta.
Outcome lemma_isp_witness(Context& ctx) {
  constexpr int kInstances = 20;
  constexpr Index kLazyBlocks = 50;
  for (int inst = 0; inst < kInstances; ++inst) {
    const Rational delta = pow2_inv(ctx.between(1, 6));
    const Index N = spec::relaxation_time(delta);
    const bool lazy = inst % 2 == 1;
    const Index blocks = lazy ? kLazyBlocks : ctx.between(1, 12);
    std::vector<Sequence> targets;
    std::vector<spec::SpecInterval> intervals;
    Index a = ctx.below(5);
    for (Index i = 0; i < blocks; ++i) {
      const Index b = a + ctx.below(11);
      targets.push_back(ctx.random_periodic(5));
      intervals.push_back({a, b});
      a = b + N + ctx.below(4);
    }
    Sequence y;
    if (lazy) {
      // Unbounded stream; only its first kLazyBlocks blocks are checked.
      Index next_block = 0;
      const std::uint64_t seed = ctx.rng();
      y = spec::build_isp_witness(
          [=]() mutable -> std::optional<spec::IspBlock> {
            const Index i = next_block++;
            if (i < targets.size()) return spec::IspBlock{targets[i], intervals[i]};
            std::mt19937_64 more(seed + i);
            const Index a_i = intervals.back().b + (i - targets.size() + 1) * (N + 11);
            return spec::IspBlock{Sequence::constant(more() % 2), {a_i, a_i + more() % 11}};
          },
          delta);
    } else {
      y = spec::build_isp_witness(targets, intervals, delta);
    }
    const Rational precision = delta / 10;
    for (Index i = 0; i < blocks; ++i) {
      for (Index j = intervals[i].a; j <= intervals[i].b; ++j) {
        ++ctx.checks;
        const auto d = symbolic::dist_certified(y.shifted(j), targets[i].shifted(j), precision);
        if (d.upper() >= delta) {
          return fail("block " + std::to_string(i) + " iterate " + std::to_string(j) + " is not delta-close",
                      {{"delta", io::rational_to_json(delta)},
                       {"block", i},
                       {"iterate", j},
                       {"target", describe(targets[i], 0)},
                       {"witness", describe(y, j + 64)}});
        }
      }
    }
  }
  return pass(std::to_string(kInstances) + " instances, finite and streamed");
}

// A pattern point follows z_i for c_i iterates after a gap of M positions.
Outcome lemma_spec_pattern(Context& ctx) {
  constexpr int kInstances = 20;
  for (int inst = 0; inst < kInstances; ++inst) {
    const Rational delta = pow2_inv(ctx.between(1, 6));
    const Index M = spec::relaxation_time(delta) + ctx.below(4);
    std::vector<spec::PatternBlock> blocks;
    for (Index i = 0, n = ctx.between(1, 10); i < n; ++i) blocks.push_back({ctx.random_periodic(6), ctx.below(13)});
    const Sequence p = spec::build_spec_pattern(blocks, M, delta).point;
    Index a = 0;
    for (Index i = 0; i < blocks.size(); ++i) {
      for (Index t = 0; t <= blocks[i].c; ++t) {
        ++ctx.checks;
        const auto d = symbolic::dist_certified(p.shifted(a + t), blocks[i].z.shifted(t), delta / 10);
        if (d.upper() >= delta) {
          return fail("block " + std::to_string(i) + " not followed at step " + std::to_string(t),
                      {{"delta", io::rational_to_json(delta)},
                       {"M", M},
                       {"block", i},
                       {"step", t},
                       {"z", describe(blocks[i].z, 0)},
                       {"point", describe(p, a + t + 64)}});
        }
      }
      a += blocks[i].c + M;
    }
  }
  // A gap below the relaxation time must be refused.
  try {
    const std::vector<spec::PatternBlock> one{{Sequence::constant(0), 1}};
    (void)spec::build_spec_pattern(one, spec::relaxation_time(Rational(1, 8)) - 1, Rational(1, 8));
    return fail("gap below the relaxation time was accepted", nullptr);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::precondition) throw;
  }
  return pass(std::to_string(kInstances) + " patterns");
}

// Points agreeing on j+1 symbols are within eta lambda^{-j}; below eta the
// shift doubles distances.
Outcome lemma_closeness(Context& ctx) {
  const auto& ex = ctx.params.expansivity;
  constexpr int kPairs = 200;
  for (int k = 0; k < kPairs; ++k) {
    const Index j = ctx.below(41);
    const Word w = ctx.random_word(j + 1);
    Word tx = ctx.random_word(ctx.between(1, 12));
    Word ty = ctx.random_word(ctx.between(1, 12));
    if (tx == ty) ty[0] ^= 1;
    const Sequence x = Sequence::periodic(tx, w);
    const Sequence y = Sequence::periodic(ty, w);
    const auto d = symbolic::dist_exact(x, y);
    if (!d) return skip("closed form unavailable");
    ++ctx.checks;
    Rational bound = ex.eta;
    for (Index i = 0; i < j; ++i) bound /= ex.lambda;
    const auto identity = symbolic::shift_doubling_identity(x, y);
    if (*d > bound || !identity.value_or(false)) {
      return fail("agreement on " + std::to_string(j + 1) + " symbols gave d = " + omega::to_string(*d),
                  {{"x", describe(x, 0)}, {"y", describe(y, 0)}, {"j", j}, {"bound", io::rational_to_json(bound)}});
    }
  }
  return pass(std::to_string(kPairs) + " pairs");
}

// No point lies in both E_beta and E_gamma when beta and gamma differ.
Outcome lemma_e_disjointness(Context& ctx) {
  constexpr Index kDepth = 10;
  constexpr int kPairs = 20;
  for (int k = 0; k < kPairs; ++k) {
    const Word wb = ctx.random_word(kDepth);
    Word wg = ctx.random_word(kDepth);
    if (wg == wb) wg[ctx.below(kDepth)] ^= 1;
    const Sequence beta = Sequence::periodic(wb);
    const Sequence gamma = Sequence::periodic(wg);
    const std::vector<Sequence> candidates{scramble::e_beta_witness(beta, ctx.params),
                                           scramble::e_beta_witness(gamma, ctx.params),
                                           ctx.random_periodic(2 * ctx.params.stride())};
    for (const auto& x : candidates) {
      ++ctx.checks;
      const auto vb = scramble::is_in_E(x, beta, ctx.params, kDepth);
      const auto vg = scramble::is_in_E(x, gamma, ctx.params, kDepth);
      if (vb.member && vg.member) {
        return fail("a point passes is_in_E for two different beta",
                    {{"x", describe(x, ctx.params.b(kDepth) + 64)},
                     {"beta", describe(beta, 0)},
                     {"gamma", describe(gamma, 0)},
                     {"depth", kDepth},
                     {"epsilon", io::dyadic_to_json(ctx.params.epsilon)},
                     {"params_validated", ctx.params.validated}});
      }
    }
  }
  return pass(std::to_string(kPairs) + " beta/gamma pairs");
}

// Periodicity of an E_beta witness can only come from beta: over matching
// windows the witness has a period exactly when beta does, scaled by the
// stride. Sturmian prefixes do show short periods at convergent lengths, so
// the check compares the two rather than expecting "none".
Outcome lemma_non_periodicity(Context& ctx) {
  const Index stride = ctx.params.stride();
  if (ctx.params.t0.take(0, stride) == ctx.params.t1.take(0, stride)) return skip("t0 and t1 share a block");
  std::vector<Sequence> betas{silver(), fibonacci(), ctx.random_periodic(12)};
  const auto fam = family::generate_family(std::max<std::size_t>(2, ctx.config.family_size), ctx.config.seed,
                                           ctx.config.separation);
  for (const auto& m : fam.members) betas.push_back(family::sturmian_sequence(m));
  const Index bits = ctx.between(100, 800);
  for (const auto& beta : betas) {
    ++ctx.checks;
    const auto pb = symbolic::least_period_upto(beta, bits - 1);
    const auto pw = symbolic::least_period_upto(scramble::e_beta_witness(beta, ctx.params), bits * stride - 1);
    const bool consistent = pb ? (pw && *pw == *pb * stride) : !pw;
    if (!consistent) {
      return fail("witness period " + (pw ? std::to_string(*pw) : std::string("none")) + " vs beta period " +
                      (pb ? std::to_string(*pb) : std::string("none")),
                  {{"beta", describe(beta, 0)}, {"bits", bits}});
    }
  }
  return pass(std::to_string(betas.size()) + " beta over " + std::to_string(bits) + " blocks");
}

// sigma^{a_k} of the beta-witness lies in E_{sigma^k beta}.
Outcome lemma_shift_invariance(Context& ctx) {
  constexpr Index kDepth = 10;
  constexpr Index kMaxShift = 20;
  const std::vector<Sequence> betas{silver(), fibonacci(), ctx.random_periodic(16)};
  for (const auto& beta : betas) {
    const Sequence w = scramble::e_beta_witness(beta, ctx.params);
    for (Index k = 0; k <= kMaxShift; ++k) {
      ++ctx.checks;
      const auto v = scramble::is_in_E(w.shifted(ctx.params.a(k)), beta.shifted(k), ctx.params, kDepth);
      if (!v.member) {
        return fail("shifted witness leaves E at block " + std::to_string(*v.first_failing_block),
                    {{"beta", describe(beta, 0)}, {"k", k}, {"depth", kDepth}});
      }
    }
  }
  return pass("k <= 20 for 3 beta");
}

// Entries of the H_chi enumeration fail E_beta once the depth reaches a
// beta-factor absent from chi.
Outcome lemma_separation(Context& ctx) {
  const std::vector<std::pair<Sequence, Sequence>> pairs{{silver(), fibonacci()}, {fibonacci(), silver()}};
  for (const auto& [beta, chi] : pairs) {
    const auto L = divergence_length(beta, chi, 0, 10000);
    if (!L) return skip("no factor divergence found within length 64");
    const auto enumeration = scramble::h_beta_proxy(chi, ctx.params, ctx.config.shift_depth, ctx.config.orbit_depth);
    for (const auto& e : enumeration.entries) {
      ++ctx.checks;
      if (scramble::is_in_E(e.sequence, beta, ctx.params, *L).member) {
        return fail("an H_chi entry lies in E_beta",
                    {{"beta", describe(beta, 0)},
                     {"chi", describe(chi, 0)},
                     {"row", e.row},
                     {"column", e.column},
                     {"depth", *L}});
      }
    }
  }
  return pass("both directions of the silver/Fibonacci pair");
}

struct BuiltPair {
  analysis::ConstructedPoint b;
  analysis::ConstructedPoint g;
};

BuiltPair build_pair(const Context& ctx) {
  return {analysis::construct_point("silver", silver(), ctx.params, ctx.config.shift_depth, ctx.config.orbit_depth),
          analysis::construct_point("fibonacci", fibonacci(), ctx.params, ctx.config.shift_depth,
                                    ctx.config.orbit_depth)};
}

// s and every enumeration entry recur in p_beta.
Outcome lemma_inclusion(Context& ctx) {
  const auto rp = recurrence(ctx.config);
  const auto p = analysis::construct_point("silver", silver(), ctx.params, ctx.config.shift_depth,
                                           ctx.config.orbit_depth);
  const Word xs = analysis::materialize(p.point, rp);
  const Index stride = ctx.params.stride();
  for (const Index K : {stride, 2 * stride}) {
    ++ctx.checks;
    if (!analysis::recurs(xs, ctx.params.s.take(0, K), rp)) {
      return fail("prefix of s does not recur", {{"K", K}, {"beta", describe(p.beta, 0)}});
    }
    for (const auto& e : p.enumeration.entries) {
      ++ctx.checks;
      if (!analysis::recurs(xs, e.sequence.take(0, K), rp)) {
        return fail("enumeration entry does not recur",
                    {{"K", K}, {"row", e.row}, {"column", e.column}, {"beta", describe(p.beta, 0)}});
      }
    }
  }
  return pass("s and " + std::to_string(p.enumeration.entries.size()) + " entries at K = stride, 2 stride");
}

// No entry of H_beta recurs in p_gamma for a disjoint pair.
Outcome lemma_exclusion(Context& ctx) {
  const auto rp = recurrence(ctx.config);
  const BuiltPair pair = build_pair(ctx);
  const Index max_start = ctx.config.shift_depth + ctx.config.orbit_depth;
  Index blocks = 0;
  for (const auto& [beta, chi] : {std::pair{pair.b.beta, pair.g.beta}, std::pair{pair.g.beta, pair.b.beta}}) {
    const auto L = divergence_length(beta, chi, max_start, 10000);
    if (!L) return skip("no factor divergence found within length 64");
    blocks = std::max(blocks, *L + 1);
  }
  const Index K = blocks * ctx.params.stride();
  if (rp.horizon < 10 * K) return skip("horizon too short for depth " + std::to_string(K));
  const Word xb = analysis::materialize(pair.b.point, rp);
  const Word xg = analysis::materialize(pair.g.point, rp);
  ctx.checks += 3;
  if (!analysis::verify_exclusion(xg, pair.b.enumeration, K, rp)) {
    return fail("an H_beta entry recurs in p_gamma", {{"K", K}, {"beta", describe(pair.b.beta, 0)},
                                                      {"gamma", describe(pair.g.beta, 0)}});
  }
  if (!analysis::verify_exclusion(xb, pair.g.enumeration, K, rp)) {
    return fail("an H_gamma entry recurs in p_beta", {{"K", K}, {"beta", describe(pair.g.beta, 0)},
                                                      {"gamma", describe(pair.b.beta, 0)}});
  }
  // Control: at one block the entries do recur in their own point.
  if (analysis::verify_exclusion(xb, pair.b.enumeration, ctx.params.stride(), rp)) {
    return fail("own enumeration reported absent from p_beta",
                {{"K", ctx.params.stride()}, {"beta", describe(pair.b.beta, 0)}});
  }
  return pass("both directions at K = " + std::to_string(K));
}

// A finite prefix does not change the omega-limit set.
Outcome lemma_prepend(Context& ctx) {
  constexpr int kWords = 20;
  const auto rp = recurrence(ctx.config);
  const auto p = analysis::construct_point("silver", silver(), ctx.params, ctx.config.shift_depth,
                                           ctx.config.orbit_depth);
  const std::vector<Index> depths{2, ctx.params.stride()};
  std::vector<analysis::CylinderSet> reference;
  const Word xs = analysis::materialize(p.point, rp);
  for (const Index K : depths) reference.push_back(analysis::omega_cylinders(xs, K, rp));
  for (int k = 0; k < kWords; ++k) {
    const Word w = ctx.random_word(ctx.between(1, 20));
    const Sequence q = symbolic::prepend(w, p.point);
    auto shifted_rp = rp;
    shifted_rp.origin = w.size();
    const Word qs = analysis::materialize(q, shifted_rp);
    for (std::size_t d = 0; d < depths.size(); ++d) {
      ++ctx.checks;
      if (analysis::omega_cylinders(qs, depths[d], shifted_rp) != reference[d]) {
        return fail("prefix changed the depth-" + std::to_string(depths[d]) + " cylinders",
                    {{"w", symbolic::format_word(w)}, {"K", depths[d]}, {"beta", describe(p.beta, 0)}});
      }
    }
  }
  return pass(std::to_string(kWords) + " prefixes at depths 2 and stride");
}

// p_beta lands within epsilon/8 of the chosen centre xi.
Outcome lemma_density(Context& ctx) {
  constexpr std::size_t kCentres = 5;
  std::vector<Word> seen;
  while (seen.size() < kCentres) {
    const Word w = ctx.random_word(ctx.between(1, 8));
    if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
  }
  for (const Word& w : seen) {
    const Sequence xi = Sequence::periodic(w);
    scramble::SystemParams params = ctx.params;
    params.xi = xi;
    const auto p = analysis::construct_point("density", silver(), params, 1, 1);
    ++ctx.checks;
    const auto d = symbolic::dist_certified(p.point, xi, params.epsilon / 80);
    if (d.upper() >= params.epsilon / 8 || d.upper() >= params.D) {
      return fail("p_beta is not within epsilon/8 of xi",
                  {{"xi", describe(xi, 0)}, {"upper", io::rational_to_json(d.upper())}});
    }
  }
  return pass(std::to_string(kCentres) + " centres");
}

using LemmaFn = Outcome (*)(Context&);

struct Entry {
  std::string_view name;
  LemmaFn fn;
};

constexpr Entry kRegistry[] = {
    {"isp_witness", lemma_isp_witness},
    {"spec_pattern", lemma_spec_pattern},
    {"closeness", lemma_closeness},
    {"e_disjointness", lemma_e_disjointness},
    {"non_periodicity", lemma_non_periodicity},
    {"shift_invariance", lemma_shift_invariance},
    {"separation", lemma_separation},
    {"inclusion", lemma_inclusion},
    {"exclusion", lemma_exclusion},
    {"prepend", lemma_prepend},
    {"density", lemma_density},
};

}  // namespace

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::pass:
      return "pass";
    case LemmaStatus::fail:
      return "fail";
    case LemmaStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

bool SuiteResult::passed() const {
  return std::none_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.status == LemmaStatus::fail; });
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kRegistry) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

SuiteResult run_lemma_suite(const RunConfig& config, const std::vector<std::string>& filter) {
  for (const auto& name : filter) {
    const auto& names = lemma_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(ErrorKind::invalid_argument, "unknown lemma '" + name + "'");
    }
  }
  const scramble::SystemParams params = derive(config);
  validate(config, params);

  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < std::size(kRegistry); ++i) {
    if (filter.empty() || std::find(filter.begin(), filter.end(), kRegistry[i].name) != filter.end()) {
      selected.push_back(i);
    }
  }

  SuiteResult result;
  result.verdicts.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t slot = next++; slot < selected.size(); slot = next++) {
      const std::size_t index = selected[slot];
      std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                        static_cast<std::uint32_t>(index)};
      Context ctx{config, params, std::mt19937_64(seq)};
      LemmaVerdict& v = result.verdicts[slot];
      v.name = kRegistry[index].name;
      const auto start = std::chrono::steady_clock::now();
      try {
        Outcome o = kRegistry[index].fn(ctx);
        v.status = o.status;
        v.detail = std::move(o.detail);
        v.counterexample = std::move(o.counterexample);
      } catch (const std::exception& e) {
        v.status = LemmaStatus::fail;
        v.detail = std::string("error: ") + e.what();
        v.counterexample = nullptr;
      }
      v.checks = ctx.checks;
      v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const std::size_t n_workers = std::clamp<std::size_t>(config.workers, 1, std::max<std::size_t>(1, selected.size()));
  std::vector<std::jthread> pool;
  for (std::size_t i = 1; i < n_workers; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  return result;
}

io::Json results_json(const SuiteResult& result) {
  io::Json out = io::Json::array();
  for (const auto& v : result.verdicts) {
    out.push_back({{"lemma", v.name},
                   {"status", to_string(v.status)},
                   {"detail", v.detail},
                   {"checks", v.checks},
                   {"counterexample", v.counterexample}});
  }
  return out;
}

io::Json suite_to_json(const SuiteResult& result, const RunConfig& config) {
  io::Json timing = io::Json::object();
  for (const auto& v : result.verdicts) timing[v.name] = v.millis;
  return {{"results", results_json(result)},
          {"passed", result.passed()},
          {"config", config_to_json(config)},
          {"provenance", {{"timing_ms", std::move(timing)}}}};
}

}  // namespace omega::report
