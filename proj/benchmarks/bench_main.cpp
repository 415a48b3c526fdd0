#include <benchmark/benchmark.h>

#include "sklylab/heisenberg.hpp"
#include "sklylab/instance.hpp"
#include "sklylab/singularity.hpp"
#include "sklylab/skly.hpp"

using namespace sklylab;

static void BM_GradedDimension(benchmark::State& state) {
  const auto field = state.range(1) ? FieldSpec::prime_field(10007) : FieldSpec::rational();
  const auto p = SklyaninParams::parse(field, "-5/7", "2", "3");
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SklyaninAlgebra S(p);
    benchmark::DoNotOptimize(S.graded_dimension(d));
  }
}
BENCHMARK(BM_GradedDimension)->ArgsProduct({{4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_EvenSingularBasis(benchmark::State& state) {
  const auto P = preset_even_rho1();
  for (auto _ : state) {
    const PolyIdeal I = singular_locus_ideal(P);
    benchmark::DoNotOptimize(I.basis().polys().size());
  }
}
BENCHMARK(BM_EvenSingularBasis)->Unit(benchmark::kMillisecond);

static void BM_H4Enumeration(benchmark::State& state) {
  const auto g = build_generators(SklyaninParams::parse(FieldSpec(), "-5/7", "2", "3"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group({g.eps, g.eps1, g.eps2}).size());
}
BENCHMARK(BM_H4Enumeration)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
