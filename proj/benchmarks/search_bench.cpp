#include <benchmark/benchmark.h>

#include "loopkit/search.hpp"

namespace {

using namespace loopkit;

void BM_AllLoops(benchmark::State& state) {
  SearchSpec spec;
  spec.order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_loops(spec).solutions.size());
}
BENCHMARK(BM_AllLoops)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_GammaSearch(benchmark::State& state) {
  SearchSpec spec;
  spec.order = static_cast<std::size_t>(state.range(0));
  spec.identities = gamma_identities();
  spec.commutative = true;
  spec.dedupe = DedupeMode::up_to_isomorphism;
  for (auto _ : state) benchmark::DoNotOptimize(search_loops(spec).solutions.size());
}
BENCHMARK(BM_GammaSearch)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
