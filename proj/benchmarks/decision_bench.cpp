#include <benchmark/benchmark.h>

#include <vector>

#include "idealforge/embed.hpp"
#include "idealforge/finprime.hpp"
#include "idealforge/partition.hpp"
#include "idealforge/random.hpp"
#include "idealforge/sumspace.hpp"

namespace {

using namespace idealforge;

std::vector<SymbolicSet> symbolic_pool(std::size_t level) {
  Rng rng(level);
  std::vector<SymbolicSet> out;
  for (int k = 0; k < 64; ++k) out.push_back(random_symbolic_set(rng, level, {4, 8, 3}));
  return out;
}

void BM_FinMember(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  const auto pool = symbolic_pool(level);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fin_member(pool[k++ % pool.size()], level));
  }
}
BENCHMARK(BM_FinMember)->DenseRange(1, 4);

void BM_Complement(benchmark::State& state) {
  const auto pool = symbolic_pool(static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(complement(pool[k++ % pool.size()]));
  }
}
BENCHMARK(BM_Complement)->DenseRange(1, 4);

void BM_FinOmegaMember(benchmark::State& state) {
  Rng rng(5);
  std::vector<SumSymbolicSet> pool;
  for (int k = 0; k < 32; ++k) pool.push_back(k % 2 ? random_finomega_member(rng) : random_sum_set(rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(finomega_member(pool[k++ % pool.size()]));
  }
}
BENCHMARK(BM_FinOmegaMember);

void BM_EnumerateIntersection(benchmark::State& state) {
  const std::map<std::size_t, Point> cons{{0, {5}}, {1, {2, 7}}, {3, {1, 0, 2, 1}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_intersection(Family::B, cons, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateIntersection)->Arg(50)->Arg(500);

void BM_FinPrimeMember(benchmark::State& state) {
  Rng rng(9);
  std::vector<CertifiedSet> pool;
  for (int k = 0; k < 32; ++k) pool.push_back(random_certified_set(rng, Family::A, static_cast<std::size_t>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(finprime_member(pool[k++ % pool.size()]));
  }
}
BENCHMARK(BM_FinPrimeMember)->DenseRange(0, 2);

void BM_BuildEmbedding(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_mc_embedding(Family::A, Family::B, static_cast<std::size_t>(state.range(0))));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildEmbedding)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace
BENCHMARK_MAIN();
