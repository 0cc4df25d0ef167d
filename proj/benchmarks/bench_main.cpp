/**
 * @file bench_main.cpp
 * @brief Micro benchmarks for the hot paths: random access, window
 *        materialization, cylinder scans and distance evaluation.
 */
#include <benchmark/benchmark.h>

#include "omega/analysis/cylinders.hpp"
#include "omega/analysis/scramble_report.hpp"
#include "omega/family/sturmian.hpp"
#include "omega/report/run_config.hpp"
#include "omega/symbolic/metric.hpp"

namespace {

using omega::Rational;
using omega::symbolic::Index;
using omega::symbolic::Sequence;

const omega::scramble::SystemParams& default_params() {
  static const auto params = omega::report::derive(omega::report::RunConfig{});
  return params;
}

const omega::analysis::ConstructedPoint& silver_point() {
  static const auto point = omega::analysis::construct_point(
      "silver", omega::family::sturmian_sequence(omega::family::silver_spec()), default_params(), 8, 4);
  return point;
}

void BM_SturmianSymbolAt(benchmark::State& state) {
  const Sequence x = omega::family::sturmian_sequence(omega::family::fibonacci_spec());
  Index n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.at(n));
    n = (n + 7919) % 1000000;
  }
}
BENCHMARK(BM_SturmianSymbolAt);

void BM_PBetaSymbolAt(benchmark::State& state) {
  const Sequence& p = silver_point().point;
  (void)p.take(0, 100000);
  Index n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.at(n));
    n = (n + 7919) % 100000;
  }
}
BENCHMARK(BM_PBetaSymbolAt);

void BM_PBetaMaterialize(benchmark::State& state) {
  const auto length = static_cast<Index>(state.range(0));
  for (auto _ : state) {
    const auto p = omega::analysis::construct_point(
        "silver", omega::family::sturmian_sequence(omega::family::silver_spec()), default_params(), 8, 4);
    benchmark::DoNotOptimize(p.point.take(0, length));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PBetaMaterialize)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_OmegaCylinders(benchmark::State& state) {
  omega::analysis::RecurrenceParams rp;
  const auto xs = omega::analysis::materialize(silver_point().point, rp);
  const auto K = static_cast<Index>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omega::analysis::omega_cylinders(xs, K, rp));
}
BENCHMARK(BM_OmegaCylinders)->Arg(13)->Arg(26)->Arg(78)->Unit(benchmark::kMillisecond);

void BM_DistTruncated(benchmark::State& state) {
  const Sequence x = omega::family::sturmian_sequence(omega::family::fibonacci_spec());
  const Sequence y = omega::family::sturmian_sequence(omega::family::silver_spec());
  const Rational precision = omega::pow2_inv(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(omega::symbolic::dist(x, y, precision));
}
BENCHMARK(BM_DistTruncated)->Arg(16)->Arg(64);

void BM_DistExactPeriodic(benchmark::State& state) {
  const Sequence x = Sequence::periodic(omega::symbolic::parse_word("0110100110010110"));
  const Sequence y = Sequence::periodic(omega::symbolic::parse_word("011"));
  for (auto _ : state) benchmark::DoNotOptimize(omega::symbolic::dist_exact(x, y));
}
BENCHMARK(BM_DistExactPeriodic);

}  // namespace

BENCHMARK_MAIN();
