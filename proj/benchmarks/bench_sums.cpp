#include <benchmark/benchmark.h>

#include <vector>

#include "fpl/fmp.hpp"

namespace {

void args_for(const fpl::Ring& ring, int depth, std::vector<std::uint64_t>& out) {
  out.clear();
  for (int i = 0; i < depth; ++i) out.push_back((3 + 5 * static_cast<std::uint64_t>(i)) % ring.m);
}

// range(0) = p, range(1) = depth
void BM_NestedSum(benchmark::State& state) {
  const fpl::Ring ring(static_cast<std::uint32_t>(state.range(0)), 2);
  const fpl::Index k(std::vector<int>(static_cast<std::size_t>(state.range(1)), 2));
  std::vector<std::uint64_t> args;
  args_for(ring, k.depth(), args);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpl::nested_sum(ring, k, args, false, fpl::SumKind::harmonic));
  }
}
BENCHMARK(BM_NestedSum)->ArgsProduct({{101, 499, 997}, {2, 3, 4}});

void BM_NestedSumNaive(benchmark::State& state) {
  const fpl::Ring ring(static_cast<std::uint32_t>(state.range(0)), 2);
  const fpl::Index k(std::vector<int>(static_cast<std::size_t>(state.range(1)), 2));
  std::vector<std::uint64_t> args;
  args_for(ring, k.depth(), args);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpl::nested_sum_naive(ring, k, args, false, fpl::SumKind::harmonic));
  }
}
BENCHMARK(BM_NestedSumNaive)->ArgsProduct({{31, 101}, {2, 3}});

void BM_HeadOnesAtHalf(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const fpl::Index k(std::vector<int>(4, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpl::fast_nested_eval(k, fpl::Rational(1, 2), p, 2, true, fpl::End::head));
  }
}
BENCHMARK(BM_HeadOnesAtHalf)->Arg(101)->Arg(499);

void BM_OyDecompose(benchmark::State& state) {
  const fpl::Index k(std::vector<int>(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(fpl::oy_decompose(k, fpl::Rational(2), 31, 1));
}
BENCHMARK(BM_OyDecompose)->DenseRange(2, 5);

}  // namespace
