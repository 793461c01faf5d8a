#include <benchmark/benchmark.h>

#include "hardsq/complex.hpp"
#include "hardsq/homology.hpp"
#include "hardsq/morse.hpp"

namespace {

using namespace hardsq;

void BM_FVector(benchmark::State& state) {
  int n = int(state.range(0)), p = int(state.range(1)), q = int(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(f_vector(n, p, q));
}
BENCHMARK(BM_FVector)->Args({3, 3, 3})->Args({4, 4, 4})->Args({5, 3, 4})->Unit(benchmark::kMillisecond);

void BM_MorseBuild(benchmark::State& state) {
  int n = int(state.range(0)), p = int(state.range(1)), q = int(state.range(2));
  MorseOptions options;
  options.use_symmetry = state.range(3) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_morse_complex(n, p, q, options));
}
BENCHMARK(BM_MorseBuild)
    ->Args({4, 4, 4, 1})
    ->Args({4, 4, 4, 0})
    ->Args({5, 3, 4, 1})
    ->Args({5, 5, 5, 1})
    ->Unit(benchmark::kMillisecond);

void BM_MorseBetti(benchmark::State& state) {
  ChainComplex cc = build_morse_complex(int(state.range(0)), int(state.range(1)), int(state.range(2)))
                        .chain_complex();
  Field field = state.range(3) ? Field::rational() : Field::gf2();
  for (auto _ : state) benchmark::DoNotOptimize(betti(cc, field));
}
BENCHMARK(BM_MorseBetti)->Args({5, 5, 5, 0})->Args({5, 5, 5, 1})->Args({6, 3, 3, 0})->Unit(benchmark::kMillisecond);

void BM_DirectRank(benchmark::State& state) {
  CubicalComplex cx = CubicalComplex::build(int(state.range(0)), int(state.range(1)), int(state.range(2)));
  ChainComplex cc = cx.chain_complex();
  for (auto _ : state) benchmark::DoNotOptimize(betti(cc, Field::gf2()));
}
BENCHMARK(BM_DirectRank)->Args({3, 3, 3})->Args({4, 3, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
