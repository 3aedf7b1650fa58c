#include <benchmark/benchmark.h>

#include "fpl/residue.hpp"

namespace {

void BM_BernoulliMod(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpl::bernoulli_mod(p - 3, p, 2));
}
BENCHMARK(BM_BernoulliMod)->Arg(101)->Arg(499);

void BM_GeneralizedBernoulli(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpl::gen_bernoulli_1(3, p, 3));
}
BENCHMARK(BM_GeneralizedBernoulli)->Arg(61)->Arg(499);

}  // namespace
