// Serial reference vs OpenMP kernels. The thread count comes from
// OMP_NUM_THREADS; on one core the two should be within noise.

#include <benchmark/benchmark.h>

#include "twistcert/identities.hpp"
#include "twistcert/sweeps.hpp"

using namespace twistcert;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel; }

void BM_BurauOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(burau_oracle_sweep(2000, 30, 1, mode(state)));
  state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_SnfCertificates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(snf_certificate_sweep(500, 6, 9, 1, mode(state)));
  state.SetItemsProcessed(state.iterations() * 500);
}

void BM_Suite(benchmark::State& state) {
  const auto& manifest = builtin_manifest();
  for (auto _ : state) benchmark::DoNotOptimize(verify_suite(manifest, mode(state)));
}

}  // namespace

// Arg 0 = serial, 1 = parallel
BENCHMARK(BM_BurauOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnfCertificates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
