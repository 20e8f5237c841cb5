#include <benchmark/benchmark.h>

#include <vector>

#include "ddgen/canonical.hpp"
#include "ddgen/ddcolour.hpp"
#include "ddgen/generator.hpp"

using namespace ddgen;

namespace {

std::vector<std::pair<Pregraph, Colouring>> sample(int n) {
  std::vector<std::pair<Pregraph, Colouring>> out;
  generate_marked(n, [&](const Pregraph& g, const Colouring& m) { out.emplace_back(g, m); });
  return out;
}

void BM_CanonicalForm(benchmark::State& state) {
  auto graphs = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& [g, m] : graphs) benchmark::DoNotOptimize(canonical_form(g, m));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12);

void BM_EnumerateLists(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lists(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateLists)->Arg(10)->Arg(16);

void BM_GenerateMarked(benchmark::State& state) {
  for (auto _ : state) {
    auto stats = generate_marked(static_cast<int>(state.range(0)), [](const Pregraph&, const Colouring&) {});
    benchmark::DoNotOptimize(stats.graphs);
  }
}
BENCHMARK(BM_GenerateMarked)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_GenerateMarkable(benchmark::State& state) {
  for (auto _ : state) {
    auto stats = generate_markable(static_cast<int>(state.range(0)), [](const Pregraph&, const Colouring&) {});
    benchmark::DoNotOptimize(stats.graphs);
  }
}
BENCHMARK(BM_GenerateMarkable)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DelaneyDress(benchmark::State& state) {
  auto graphs = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const auto& [g, m] : graphs) total += enumerate_dd(g, m, {});
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_DelaneyDress)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
