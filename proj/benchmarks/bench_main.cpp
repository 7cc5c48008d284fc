#include <benchmark/benchmark.h>

#include <random>

#include "opmono/cumulants.hpp"
#include "opmono/partitions.hpp"
#include "opmono/random_models.hpp"
#include "opmono/series.hpp"

using namespace opmono;

namespace {

const MatrixModel& model() {
  static const MatrixModel m = random_model(1000, {2, 2, 2, false});
  return m;
}

void BM_EnumerateMonotone(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monotone_partitions(n));
}
BENCHMARK(BM_EnumerateMonotone)->DenseRange(3, 6);

void BM_QMapAllOrdered(benchmark::State& state) {
  const auto ordered = ordered_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& p : ordered) benchmark::DoNotOptimize(q_map(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ordered.size()));
}
BENCHMARK(BM_QMapAllOrdered)->DenseRange(3, 5);

void BM_DotMoment(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto method = state.range(1) == 0 ? DotMethod::QMap : DotMethod::Reduction;
  const MomentSystem x = memoize(moments_of(model(), n));
  std::mt19937_64 rng(1);
  const auto args = random_args(rng, 2, n);
  const std::vector<int> word(n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(dot_moment(x, 3, word, args, method));
}
BENCHMARK(BM_DotMoment)->ArgsProduct({{2, 3, 4, 5}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_CumulantOnBasis(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MomentSystem x = memoize(moments_of(model(), n));
  const CumulantSystem k = cumulant(x);
  const auto tuples = basis_tuples(2, n);
  const std::vector<int> word(n, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(k(word, tuples[i++ % tuples.size()]));
}
BENCHMARK(BM_CumulantOnBasis)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_OdotEntry(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const BSeries h = odot(random_series(1, 2, 2, n), random_series(2, 2, 2, n));
  std::mt19937_64 rng(3);
  const auto args = random_args(rng, 2, n);
  const std::vector<int> word(n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(h(word, args));
}
BENCHMARK(BM_OdotEntry)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
