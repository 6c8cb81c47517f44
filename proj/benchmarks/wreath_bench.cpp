#include <benchmark/benchmark.h>

#include <random>

#include "wreath/wreath.hpp"

using namespace wreath;

namespace {

std::vector<TreeAutomorphism> random_elements(int level, std::size_t count) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> word(0, (std::uint64_t{1} << node_count(level)) - 1);
  std::vector<TreeAutomorphism> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(TreeAutomorphism::from_word(level, word(rng)));
  return out;
}

void BM_Multiply(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const auto xs = random_elements(level, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(xs[i & 1023], xs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_Multiply)->DenseRange(2, 6, 2);

void BM_ToPermutation(benchmark::State& state) {
  const auto xs = random_elements(static_cast<int>(state.range(0)), 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(to_permutation(xs[i++ & 1023]));
}
BENCHMARK(BM_ToPermutation)->DenseRange(2, 6, 2);

void BM_OrbitPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_decomposition(n, k).count());
}
BENCHMARK(BM_OrbitPartition)->Args({1, 1})->Args({2, 1})->Args({1, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_ConjugacyClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(n).count());
}
BENCHMARK(BM_ConjugacyClasses)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_DoubleCosets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(double_cosets(n).representatives.size());
}
BENCHMARK(BM_DoubleCosets)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_AlgebraMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = centralizer_algebra_basis(n, 1);
  for (auto _ : state)
    for (const auto& x : basis) benchmark::DoNotOptimize(alg_multiply(x, basis.back()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(basis.size()));
}
BENCHMARK(BM_AlgebraMultiply)->DenseRange(1, 2)->Unit(benchmark::kMicrosecond);

void BM_EndBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(end_ind_res_basis(2, 2, 1).dimension);
}
BENCHMARK(BM_EndBasis)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
