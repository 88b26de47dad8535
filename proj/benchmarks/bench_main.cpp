#include <monoloc/barcobar.hpp>
#include <monoloc/catalog.hpp>
#include <monoloc/loopgroup.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace monoloc;

static void BM_SmithNormalForm(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = dist(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_NerveHomology(benchmark::State &state) {
  const auto k = nerve(cyclic_group(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(homology_window(chains(*k, static_cast<int>(state.range(0))).complex));
}
BENCHMARK(BM_NerveHomology)->Arg(4)->Arg(6);

static void BM_NerveBarIso(benchmark::State &state) {
  const FiniteMonoid m = cyclic_group(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(nerve_bar_iso_check(m, 4));
}
BENCHMARK(BM_NerveBarIso);

static void BM_CobarSphere(benchmark::State &state) {
  const auto c = chains(*minimal_sphere(2), 6);
  for (auto _ : state) {
    const PresentedDgAlgebra om = cobar(c, 6);
    benchmark::DoNotOptimize(algebra_complex(om, complete(om), 6));
  }
}
BENCHMARK(BM_CobarSphere);

static void BM_BarOfExterior(benchmark::State &state) {
  const PresentedDgAlgebra a = cobar(chains(*minimal_sphere(2), 6), 6);
  const RewriteSystem r = complete(a);
  for (auto _ : state)
    benchmark::DoNotOptimize(bar(algebra_window(a, r, 4), 5));
}
BENCHMARK(BM_BarOfExterior);

static void BM_GroupCompletion(benchmark::State &state) {
  const MonoidPresentation p = presentation_of(cyclic_group(4));
  for (auto _ : state)
    benchmark::DoNotOptimize(group_completion(p));
}
BENCHMARK(BM_GroupCompletion);

static void BM_H0Compare(benchmark::State &state) {
  const auto k = builtin_simplicial_set("rp2");
  for (auto _ : state)
    benchmark::DoNotOptimize(h0_compare(*k));
}
BENCHMARK(BM_H0Compare);
BENCHMARK_MAIN();
