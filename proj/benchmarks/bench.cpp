#include "commprob/constructions.hpp"
#include "commprob/equidist.hpp"
#include "commprob/probability.hpp"
#include "commprob/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace commprob;

namespace {

void bm_pair_count(benchmark::State& state) {
  const Group g = dihedral(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(commuting_pair_count(g));
  state.SetComplexityN(g.order());
}
BENCHMARK(bm_pair_count)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void bm_class_count(benchmark::State& state) {
  const Group g = dihedral(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class_count(g));
  state.SetComplexityN(g.order());
}
BENCHMARK(bm_class_count)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void bm_distribution_fast(benchmark::State& state) {
  const Group k = extraspecial(2, static_cast<int>(state.range(0)));
  const CommutatorEmbedding ke = commutator_embedding(k);
  const HomPair hp = trivial_homs(k, ke);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_distribution(k, ke, hp));
  state.SetComplexityN(k.order());
}
BENCHMARK(bm_distribution_fast)->DenseRange(1, 4)->Complexity();

void bm_distribution_naive(benchmark::State& state) {
  const Group k = extraspecial(2, static_cast<int>(state.range(0)));
  const CommutatorEmbedding ke = commutator_embedding(k);
  const HomPair hp = trivial_homs(k, ke);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_distribution_naive(k, ke, hp));
  state.SetComplexityN(k.order());
}
BENCHMARK(bm_distribution_naive)->DenseRange(1, 4)->Complexity();

void bm_composed_mul(benchmark::State& state) {
  const Group g = direct_product(dihedral(30), dihedral(40));  // order 4800, composed
  Elem x = 1;
  for (auto _ : state) {
    x = g.mul(x, static_cast<Elem>(37));
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(bm_composed_mul);

void bm_corpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corpus(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_corpus)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
