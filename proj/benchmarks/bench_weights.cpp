#include <benchmark/benchmark.h>

#include "gramquad/gauss_legendre.hpp"
#include "gramquad/gram_basis.hpp"
#include "gramquad/moments.hpp"
#include "gramquad/oracle_reference.hpp"
#include "gramquad/weights.hpp"

static void BM_ComputeRule(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto rule = gramquad::compute_rule(p);
    benchmark::DoNotOptimize(rule.weights.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeRule)->RangeMultiplier(10)->Range(100, 1000000)->Unit(benchmark::kMillisecond);

static void BM_DenseWeights(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto w = gramquad::dense_weights(p);
    benchmark::DoNotOptimize(w.data());
  }
}
BENCHMARK(BM_DenseWeights)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

static void BM_GaussLegendreRule(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = gramquad::gauss_legendre_rule(n);
    benchmark::DoNotOptimize(g.nodes.data());
  }
}
BENCHMARK(BM_GaussLegendreRule)->RangeMultiplier(4)->Range(4, 1024);

static void BM_AdvanceRow(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const auto rec = gramquad::build_recurrence(p);
  const auto x = gramquad::equidistant_points(p);
  auto row = gramquad::initial_row_state(rec, x);
  for (auto _ : state) {
    if (row.degree == rec.max_degree) row = gramquad::initial_row_state(rec, x);
    row = gramquad::advance_row(std::move(row), rec, x);
    benchmark::DoNotOptimize(row.cur.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(p) * 3 * sizeof(double));
}
BENCHMARK(BM_AdvanceRow)->Arg(10001)->Arg(1000001);

static void BM_ComputeMoments(benchmark::State& state) {
  const auto rec = gramquad::build_recurrence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto b = gramquad::compute_moments(rec);
    benchmark::DoNotOptimize(b.values.data());
  }
}
BENCHMARK(BM_ComputeMoments)->Arg(10001)->Arg(1000001);

BENCHMARK_MAIN();
