// Microbenchmarks for the hot paths: stabilizer-chain construction,
// generic automorphism search, and the regular-subgroup search.

#include <benchmark/benchmark.h>

#include "rw/autgroup.hpp"
#include "rw/cayley.hpp"
#include "rw/classify.hpp"
#include "rw/graph.hpp"
#include "rw/group.hpp"
#include "rw/named_maps.hpp"
#include "rw/params.hpp"

namespace {

using namespace rw;

void BM_GraphConstruction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RWGraph g({n, 2, 1});
    benchmark::DoNotOptimize(g.edges().data());
  }
}
BENCHMARK(BM_GraphConstruction)->Arg(16)->Arg(64)->Arg(256);

void BM_SchreierSims(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = automorphism_group(RWGraph({n, 2, 1})).group.generators();
  for (auto _ : state) {
    auto G = schreier_sims(gens, 2 * n);
    benchmark::DoNotOptimize(G.order());
  }
}
BENCHMARK(BM_SchreierSims)->Arg(9)->Arg(12)->Arg(15);

void BM_GenericAut(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RWGraph g({n, 3, 4});
  for (auto _ : state) {
    auto result = automorphism_group(g, AutMethod::Generic);
    benchmark::DoNotOptimize(result.group.order());
  }
}
BENCHMARK(BM_GenericAut)->Arg(10)->Arg(20)->Arg(40);

void BM_RegularSubgroupSearch_Negative(benchmark::State& state) {
  // R_10(3,4): |Aut| = 320, vertex-transitive, no regular subgroup.
  const auto aut = automorphism_group(RWGraph({10, 3, 4})).group;
  for (auto _ : state) {
    SearchStats stats;
    auto found = find_regular_subgroup(aut, &stats);
    benchmark::DoNotOptimize(found.has_value());
  }
}
BENCHMARK(BM_RegularSubgroupSearch_Negative);

void BM_RegularSubgroupSearch_Positive(benchmark::State& state) {
  // R_16(8,3): |Aut| = 128 with an order-32 regular subgroup.
  const auto aut = automorphism_group(RWGraph({16, 8, 3})).group;
  for (auto _ : state) {
    SearchStats stats;
    auto found = find_regular_subgroup(aut, &stats);
    benchmark::DoNotOptimize(found.has_value());
  }
}
BENCHMARK(BM_RegularSubgroupSearch_Positive);

void BM_ClassifyArithmetic(benchmark::State& state) {
  for (auto _ : state) {
    auto c = classify({48, 14, 37});
    benchmark::DoNotOptimize(c.cayley_theorem);
  }
}
BENCHMARK(BM_ClassifyArithmetic);

} // namespace

BENCHMARK_MAIN();
