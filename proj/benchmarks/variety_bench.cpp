#include <benchmark/benchmark.h>

#include "loopkit/constructions.hpp"
#include "loopkit/corpus.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/parallel.hpp"
#include "loopkit/varieties.hpp"

namespace {

using namespace loopkit;

void BM_Gamma4(benchmark::State& state) {
  const Group g = state.range(0) == 375 ? nonmetabelian_375() : heisenberg_group(5);
  const Loop q = gamma_from_group(g, {false, false, kDefaultClosureCap}).loop;
  for (auto _ : state) benchmark::DoNotOptimize(check_gamma4(q).pass);
}
BENCHMARK(BM_Gamma4)->Arg(125)->Arg(375)->Unit(benchmark::kMillisecond);

void BM_Automorphic(benchmark::State& state) {
  const Loop q = commutative_moufang_81();
  for (auto _ : state) benchmark::DoNotOptimize(check_automorphic(q).pass);
}
BENCHMARK(BM_Automorphic)->Unit(benchmark::kMillisecond);

void BM_BolWorkers(benchmark::State& state) {
  const Loop b = bruck_from_group(nonmetabelian_375(), {false, false, kDefaultClosureCap}).loop;
  set_worker_count(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_bol_bruck(b, BolBruck::bol).pass);
  set_worker_count(1);
}
BENCHMARK(BM_BolWorkers)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
