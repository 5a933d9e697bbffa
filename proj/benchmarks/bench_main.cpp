#include <benchmark/benchmark.h>

#include <memory>

#include "domset/generators.hpp"
#include "domset/oracle.hpp"
#include "domset/residual.hpp"
#include "domset/rules.hpp"

namespace {

using namespace domset;

void BM_SolveRegular5(benchmark::State& state) {
  const Graph g = generate({GeneratorModel::kRegular, static_cast<int>(state.range(0)), 5, 1, ""});
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, WeightScheme::d5()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveRegular5)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_SolveMinDegree4(benchmark::State& state) {
  const Graph g = generate({GeneratorModel::kMinDegree, static_cast<int>(state.range(0)), 4, 1, ""});
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, WeightScheme::d4()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveMinDegree4)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_BuildResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = std::make_shared<const Graph>(generate({GeneratorModel::kRegular, n, 5, 2, ""}));
  VertexSet d;
  for (Vertex v = 0; v < n; v += 7) d.push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(build_residual(g, d));
}
BENCHMARK(BM_BuildResidual)->RangeMultiplier(4)->Range(64, 4096);

void BM_Oracle(benchmark::State& state) {
  const Graph g = generate({GeneratorModel::kRegular, static_cast<int>(state.range(0)), 5, 3, ""});
  for (auto _ : state) benchmark::DoNotOptimize(minimum_dominating_set(g));
}
BENCHMARK(BM_Oracle)->DenseRange(12, 24, 4);

}  // namespace

BENCHMARK_MAIN();
