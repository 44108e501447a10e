#include <benchmark/benchmark.h>

#include <random>

#include "unilift/colorings.hpp"
#include "unilift/equivalence.hpp"
#include "unilift/liftsearch.hpp"
#include "unilift/zdet.hpp"

using namespace unilift;

static void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(det_census(n).class_count());
}
BENCHMARK(BM_Census)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_MaxDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_abs_det_invertible_binary(n));
}
BENCHMARK(BM_MaxDet)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CanonicalKey(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<BinaryMatrix> ms;
  while (ms.size() < 256) {
    const BinaryMatrix m = decode_row_major(rng() & ((1ULL << 25) - 1), 5);
    if (int_det(IntegerMatrix::from_binary(m)) % 2 != 0) ms.push_back(m);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_bits(ms[i++ & 255]));
}
BENCHMARK(BM_CanonicalKey);

static void BM_VerifyClaim5(benchmark::State& state) {
  const Coloring c = claim5_coloring();
  for (auto _ : state) benchmark::DoNotOptimize(verify_coloring(c).failure_count);
}
BENCHMARK(BM_VerifyClaim5)->Unit(benchmark::kMillisecond);

static void BM_VerifyCoset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Coloring c = theorem2_coloring(n, make_gf2_vector(n, 1), make_gf2_vector(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(verify_coloring(c).failure_count);
}
BENCHMARK(BM_VerifyCoset)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Search(benchmark::State& state) {
  SearchConfig cfg{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(search_lift(cfg).nodes);
}
BENCHMARK(BM_Search)->Args({4, 1})->Args({5, 1})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
