#include <benchmark/benchmark.h>

#include "wpd/measures.hpp"
#include "wpd/monotone.hpp"
#include "wpd/states.hpp"

namespace {

void BM_HermitianEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const wpd::Matrix m = wpd::random_mixed(n, 1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(wpd::hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(2, 64);

void BM_DualityReport(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rho = wpd::random_mixed(n, 2);
  const auto f = wpd::wigner_yanase();
  for (auto _ : state) benchmark::DoNotOptimize(wpd::duality_report(rho, f));
}
BENCHMARK(BM_DualityReport)->DenseRange(2, 6)->Arg(16)->Arg(32);

void BM_TraceMean(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = wpd::random_mixed(n, 3).spectrum().eigenvalues;
  const auto f = wpd::sld();
  for (auto _ : state) benchmark::DoNotOptimize(wpd::trace_mean(f, spec));
}
BENCHMARK(BM_TraceMean)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
