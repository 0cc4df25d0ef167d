#include "omega/analysis/scramble_report.hpp"

#include <algorithm>
#include <future>
#include <iterator>

#include <boost/iterator/function_output_iterator.hpp>

#include "omega/error.hpp"
#include "omega/scramble/p_beta.hpp"
#include "omega/symbolic/words.hpp"

namespace omega::analysis {
namespace {

std::size_t difference_size(const CylinderSet& a, const CylinderSet& b) {
  std::size_t n = 0;
  std::set_difference(a.words.begin(), a.words.end(), b.words.begin(), b.words.end(),
                      boost::make_function_output_iterator([&n](const Word&) { ++n; }));
  return n;
}

}  // namespace

ConstructedPoint construct_point(std::string id, const Sequence& beta, const scramble::SystemParams& params,
                                 Index shift_depth, Index orbit_depth) {
  ConstructedPoint p;
  p.id = std::move(id);
  p.beta = beta;
  p.params = params;
  p.enumeration = scramble::h_beta_proxy(beta, params, shift_depth, orbit_depth);
  p.point = scramble::build_p_beta(beta, params, p.enumeration).point;
  return p;
}

bool ScrambleReport::shared_cylinder_found() const {
  return !depths.empty() && std::all_of(depths.begin(), depths.end(), [](const auto& d) { return d.shared; });
}

bool ScrambleReport::exclusive_ok() const {
  if (depths.empty()) return false;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    if (depths[i].exclusive_b < 1 || depths[i].exclusive_g < 1) return false;
    if (i > 0 && (depths[i].exclusive_b < depths[i - 1].exclusive_b ||
                  depths[i].exclusive_g < depths[i - 1].exclusive_g)) {
      return false;
    }
  }
  return true;
}

bool ScrambleReport::exclusion_ok() const {
  return std::all_of(depths.begin(), depths.end(),
                     [](const auto& d) { return d.exclusion_b.value_or(true) && d.exclusion_g.value_or(true); });
}

bool ScrambleReport::passed() const {
  return shared_cylinder_found() && exclusive_ok() && nonperiodic_b.found && nonperiodic_g.found;
}

NonperiodicWitness find_nonperiodic_witness(std::span<const Symbol> xs, const scramble::SystemParams& params,
                                            const RecurrenceParams& rp) {
  const Index stride = params.stride();
  const Word block0 = params.t0.take(0, stride);
  const Word block1 = params.t1.take(0, stride);
  if (block0 == block1) return {};
  const Index end = std::min<Index>(rp.end(), xs.size());
  auto decode = [&](Index at) -> std::optional<Symbol> {
    const auto view = xs.subspan(at, stride);
    if (std::equal(view.begin(), view.end(), block0.begin())) return 0;
    if (std::equal(view.begin(), view.end(), block1.begin())) return 1;
    return std::nullopt;
  };
  for (Index j = rp.late_start(); j + kMinWitnessBits * stride <= end; ++j) {
    Word bits;
    for (Index at = j; at + stride <= end; at += stride) {
      const auto bit = decode(at);
      if (!bit) break;
      bits.push_back(*bit);
    }
    if (bits.size() < kMinWitnessBits || symbolic::least_period_of(bits).has_value()) continue;
    const auto window = xs.subspan(j, bits.size() * stride);
    if (late_occurrences(xs.first(end), window, rp) < rp.min_hits) continue;
    return {true, j, std::move(bits)};
  }
  return {};
}

bool verify_exclusion(std::span<const Symbol> xs, const scramble::WitnessEnumeration& enumeration, Index K,
                      const RecurrenceParams& rp) {
  rp.validate(K);
  return std::none_of(enumeration.entries.begin(), enumeration.entries.end(), [&](const auto& entry) {
    const Word prefix = entry.sequence.take(0, K);
    return recurs(xs, prefix, rp);
  });
}

bool verify_exclusion(const Sequence& p, const scramble::WitnessEnumeration& enumeration, Index K,
                      const RecurrenceParams& rp) {
  rp.validate(K);
  if (enumeration.entries.empty()) return true;
  const Word xs = materialize(p, rp);
  return verify_exclusion(xs, enumeration, K, rp);
}

ScrambleReport verify_scramble_pair(const ConstructedPoint& b, const ConstructedPoint& g,
                                    const std::vector<Index>& depths, const RecurrenceParams& rp,
                                    const VerifyOptions& options) {
  if (!scramble::same_construction(b.params, g.params)) {
    throw Error(ErrorKind::mismatch, "points '" + b.id + "' and '" + g.id + "' were built from different parameters");
  }
  if (depths.empty()) throw Error(ErrorKind::invalid_argument, "at least one depth is required");
  for (const Index K : depths) rp.validate(K);

  ScrambleReport report;
  report.id_b = b.id;
  report.id_g = g.id;
  report.params = b.params;
  report.recurrence = rp;

  auto materialized = std::async(std::launch::async, [&] { return materialize(g.point, rp); });
  const Word xb = materialize(b.point, rp);
  const Word xg = materialized.get();

  for (const Index K : depths) {
    DepthReport d;
    d.depth = K;
    const Word s_prefix = b.params.s.take(0, K);
    d.shared = recurs(xb, s_prefix, rp) && recurs(xg, s_prefix, rp);
    auto side_g = std::async(std::launch::async, [&] { return omega_cylinders(xg, K, rp); });
    const CylinderSet cb = omega_cylinders(xb, K, rp);
    const CylinderSet cg = side_g.get();
    d.cylinders_b = cb.words.size();
    d.cylinders_g = cg.words.size();
    d.exclusive_b = difference_size(cb, cg);
    d.exclusive_g = difference_size(cg, cb);
    if (options.exclusion) {
      d.exclusion_b = verify_exclusion(xg, b.enumeration, K, rp);
      d.exclusion_g = verify_exclusion(xb, g.enumeration, K, rp);
    }
    report.depths.push_back(d);
  }
  report.nonperiodic_b = find_nonperiodic_witness(xb, b.params, rp);
  report.nonperiodic_g = find_nonperiodic_witness(xg, g.params, rp);
  return report;
}

}  // namespace omega::analysis
