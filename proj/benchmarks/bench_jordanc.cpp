#include "jordanc/composites.hpp"
#include "jordanc/morphisms.hpp"

#include <benchmark/benchmark.h>

using namespace jordanc;

namespace {

const char* const kPairs[][2] = {
    {"R2", "R2"}, {"C2@univ", "C2@univ"}, {"R3", "Q3"}, {"Q2@univ", "Q2@univ"}, {"Q3", "Q3"},
};

void BM_CanonicalProduct(benchmark::State& state) {
  const auto& pair = kPairs[state.range(0)];
  const Ejc a = parse_algebra(pair[0]);
  const Ejc b = parse_algebra(pair[1]);
  ProductOptions o;
  o.classify = false;
  o.fixed_point_check = false;
  int dim = 0;
  for (auto _ : state) {
    const CompositeResult p = canonical_product(a, b, o);
    dim = p.dim();
    benchmark::DoNotOptimize(dim);
  }
  state.SetLabel(std::string(pair[0]) + " x " + pair[1]);
  state.counters["dim"] = dim;
}
BENCHMARK(BM_CanonicalProduct)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ClosureStrategy(benchmark::State& state) {
  const Ejc a = parse_algebra("C2@univ");
  const Ejc b = parse_algebra("R3");
  ProductOptions o;
  o.classify = false;
  o.fixed_point_check = false;
  o.strategy = state.range(0) == 0 ? ClosureStrategy::GenericElement : ClosureStrategy::Pairwise;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_product(a, b, o).dim());
  state.SetLabel(state.range(0) == 0 ? "generic element" : "pairwise");
}
BENCHMARK(BM_ClosureStrategy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HermEig(benchmark::State& state) {
  const StarAlgebra m({static_cast<int>(state.range(0))});
  Rng rng(1);
  const AlgebraElement x = random_hermitian(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(x).eigenvalues.size());
}
BENCHMARK(BM_HermEig)->RangeMultiplier(4)->Range(4, 64);

void BM_Spectral(benchmark::State& state) {
  const Ejc a = parse_algebra(state.range(0) == 0 ? "Q3" : "V6");
  Rng rng(2);
  const AlgebraElement x = a.random_element(rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral(a, x).frame.size());
  state.SetLabel(a.label());
}
BENCHMARK(BM_Spectral)->Arg(0)->Arg(1);

void BM_Classify(benchmark::State& state) {
  const CompositeResult p = canonical_product(parse_algebra("Q2@univ"), parse_algebra("Q2@univ"));
  for (auto _ : state) benchmark::DoNotOptimize(classify(p.product).size());
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_IsCp(benchmark::State& state) {
  Rng rng(3);
  const StarAlgebra s({static_cast<int>(state.range(0))});
  const MorphismMap phi = random_cp_map(s, s, rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_cp(phi).cp);
}
BENCHMARK(BM_IsCp)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
