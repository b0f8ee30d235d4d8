// Microbenchmarks for the hot paths: finite-field spans, pattern detection,
// inference, contraction, construction, and the exhaustive oracle.

#include <benchmark/benchmark.h>

#include "ixc/contraction.hpp"
#include "ixc/encoder.hpp"
#include "ixc/gf.hpp"
#include "ixc/inference.hpp"
#include "ixc/instances.hpp"
#include "ixc/oracle.hpp"
#include "ixc/structure.hpp"

namespace {

using namespace ixc;

void BM_SubspaceExtend(benchmark::State& state) {
  Field f = Field::of(101);
  Rng rng(1);
  std::vector<FVector> vectors;
  for (int i = 0; i < 64; ++i) vectors.push_back(random_nonzero_vector(f, 3, rng));
  for (auto _ : state) {
    Subspace s = Subspace::zero(f, 3);
    for (const FVector& v : vectors) {
      s.extend(v);
      benchmark::DoNotOptimize(s.dim());
    }
  }
}
BENCHMARK(BM_SubspaceExtend);

void BM_DetectPatterns_Pyramid(benchmark::State& state) {
  Problem p = instances::spic();
  for (auto _ : state) benchmark::DoNotOptimize(collect_matches(p));
}
BENCHMARK(BM_DetectPatterns_Pyramid);

void BM_DetectPatterns_Grid(benchmark::State& state) {
  Problem p = instances::xtype2_grid();
  for (auto _ : state) benchmark::DoNotOptimize(collect_matches(p));
}
BENCHMARK(BM_DetectPatterns_Grid);

void BM_QuickVerdict_PyramidChain(benchmark::State& state) {
  Problem p = instances::spic_chain();
  for (auto _ : state) benchmark::DoNotOptimize(quick_verdict(p));
}
BENCHMARK(BM_QuickVerdict_PyramidChain);

void BM_MaximalContraction_PyramidChain(benchmark::State& state) {
  Problem p = instances::spic_chain();
  for (auto _ : state) benchmark::DoNotOptimize(maximal_contraction(p));
}
BENCHMARK(BM_MaximalContraction_PyramidChain);

void BM_ConstructCode_Grid(benchmark::State& state) {
  Problem p = instances::xtype2_grid();
  uint64_t seed = 0;
  for (auto _ : state) {
    ConstructOptions opts;
    opts.seed = seed++;
    benchmark::DoNotOptimize(construct_length3_code(p, opts));
  }
}
BENCHMARK(BM_ConstructCode_Grid);

void BM_OracleWitness_TriangleChain(benchmark::State& state) {
  Problem p = instances::stic();
  for (auto _ : state) benchmark::DoNotOptimize(feasible_rate(p, 3));
}
BENCHMARK(BM_OracleWitness_TriangleChain);

void BM_OracleInfeasible_TwoChains(benchmark::State& state) {
  Problem p = instances::double_stic();
  for (auto _ : state) benchmark::DoNotOptimize(feasible_rate(p, 3));
}
BENCHMARK(BM_OracleInfeasible_TwoChains);

void BM_ClassifySubsets_Pyramid(benchmark::State& state) {
  Problem p = instances::spic();
  std::vector<MsgSet> subsets = {make_set({0, 1, 2, 3, 4}), make_set({0, 3}), make_set({1, 4}),
                                 make_set({3, 4}), make_set({0, 1})};
  for (auto _ : state) benchmark::DoNotOptimize(classify_subset_dims(p, subsets, 3));
}
BENCHMARK(BM_ClassifySubsets_Pyramid);

}  // namespace

BENCHMARK_MAIN();
