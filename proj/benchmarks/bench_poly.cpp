#include <benchmark/benchmark.h>

#include "fpl/polyid.hpp"

namespace {

// range(0) = N; the index is (2,1,1).
void BM_VerifyTheoremA(benchmark::State& state) {
  fpl::PolyParams pp;
  pp.k = fpl::Index({2, 1, 1});
  pp.N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpl::verify_poly_identity("shuffle.binomial", pp));
}
BENCHMARK(BM_VerifyTheoremA)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_PolynomialGrid(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t ok = 0;
    for (const auto& info : fpl::poly_identities()) {
      for (const auto& pp : fpl::poly_parameter_grid(info.id, 4, 4)) ok += fpl::verify_poly_identity(info.id, pp);
    }
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_PolynomialGrid)->Unit(benchmark::kMillisecond);

}  // namespace
