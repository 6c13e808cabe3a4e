#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "permclass/enumerator.hpp"
#include "permclass/gf_engine.hpp"
#include "permclass/permutation.hpp"

using namespace permclass;

namespace {

Permutation randomPermutation(std::size_t n, std::mt19937& rng) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

void BM_Contains(benchmark::State& state) {
  std::mt19937 rng(7);
  const Permutation pi = randomPermutation(static_cast<std::size_t>(state.range(0)), rng);
  const Permutation pattern = parsePermutation("2413");
  for (auto _ : state) benchmark::DoNotOptimize(contains(pi, pattern));
}
BENCHMARK(BM_Contains)->Arg(16)->Arg(64)->Arg(256);

void BM_EnumerateSeparable(benchmark::State& state) {
  const ClassSpec spec({parsePermutation("2413"), parsePermutation("3142")});
  EnumerationOptions opts;
  opts.threads = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerateAv(spec, static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_EnumerateSeparable)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ClassGF(benchmark::State& state) {
  const ClassSpec spec({parsePermutation("123"), parsePermutation("3214")});
  for (auto _ : state) benchmark::DoNotOptimize(classGF(USpec::increasing(), spec));
}
BENCHMARK(BM_ClassGF)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
