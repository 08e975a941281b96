#include "hawaii/generators.hpp"
#include "hawaii/hkappa.hpp"
#include "hawaii/partition.hpp"
#include "hawaii/realroots.hpp"
#include "hawaii/sweep.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hawaii;

namespace {

std::vector<Poly> sample(int degree, RootMode mode, int count = 16) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(degree) * 7919u);
  GeneratorConfig cfg;
  cfg.min_degree = degree;
  cfg.max_degree = degree;
  cfg.mode = mode;
  std::vector<Poly> out;
  for (int i = 0; i < count; ++i) out.push_back(generate_polynomial(cfg, rng));
  return out;
}

void BM_SturmCount(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), RootMode::arbitrary);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_roots_with_multiplicity(polys[i++ % polys.size()]));
}
BENCHMARK(BM_SturmCount)->DenseRange(4, 12, 4);

void BM_IsolateRoots(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), RootMode::p_real_simple);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(polys[i++ % polys.size()]));
}
BENCHMARK(BM_IsolateRoots)->DenseRange(4, 12, 4);

void BM_HKappa(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), RootMode::arbitrary);
  const Rational k(3, 7);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(h_kappa(polys[i++ % polys.size()], k));
}
BENCHMARK(BM_HKappa)->DenseRange(4, 12, 4);

void BM_WholeLineCounts(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), RootMode::arbitrary);
  const Rational k(3, 7);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(whole_line_counts(polys[i++ % polys.size()], k));
}
BENCHMARK(BM_WholeLineCounts)->DenseRange(4, 12, 4);

void BM_PerIntervalCounts(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), RootMode::dp_real_simple, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(per_interval_counts(polys[i++ % polys.size()], Rational(1, 3)));
}
BENCHMARK(BM_PerIntervalCounts)->DenseRange(4, 8, 2);

void BM_ExactBreakpoints(benchmark::State& state) {
  const auto polys = sample(static_cast<int>(state.range(0)), RootMode::arbitrary, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kappa_breakpoints_exact(polys[i++ % polys.size()]));
}
BENCHMARK(BM_ExactBreakpoints)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
