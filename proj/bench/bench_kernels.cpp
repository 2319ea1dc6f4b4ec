// Serial reference vs OpenMP kernels on the batch workloads used by the
// acceptance suite. Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include <cmath>

#include "wbshift/conjugacy.hpp"
#include "wbshift/kernels.hpp"

namespace {

using namespace wbshift;

std::vector<FinSeqVector> make_samples(std::size_t count, double p) {
  SampleSpec spec;
  spec.p = Exponent{p};
  spec.count = count;
  return kernels::samples_serial(spec);
}

void BM_ResidualSerial(benchmark::State& state) {
  const auto samples = make_samples(static_cast<std::size_t>(state.range(0)), 1.0);
  const auto f = ShiftOperator::constant(2.0, Exponent{1.0});
  const auto g = ShiftOperator::constant(4.0, Exponent{3.0});
  const auto h = build_conjugator(2.0, Exponent{1.0}, 4.0, Exponent{3.0});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::residuals_serial(f, g, h, samples));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ResidualParallel(benchmark::State& state) {
  const auto samples = make_samples(static_cast<std::size_t>(state.range(0)), 1.0);
  const auto f = ShiftOperator::constant(2.0, Exponent{1.0});
  const auto g = ShiftOperator::constant(4.0, Exponent{3.0});
  const auto h = build_conjugator(2.0, Exponent{1.0}, 4.0, Exponent{3.0});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::residuals_parallel(f, g, h, samples));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NormTransportSerial(benchmark::State& state) {
  const auto samples = make_samples(static_cast<std::size_t>(state.range(0)), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::max_norm_transport_error_serial(samples, 3.7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NormTransportParallel(benchmark::State& state) {
  const auto samples = make_samples(static_cast<std::size_t>(state.range(0)), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::max_norm_transport_error_parallel(samples, 3.7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SamplesSerial(benchmark::State& state) {
  SampleSpec spec;
  spec.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::samples_serial(spec));
}

void BM_SamplesParallel(benchmark::State& state) {
  SampleSpec spec;
  spec.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::samples_parallel(spec));
}

}  // namespace

BENCHMARK(BM_ResidualSerial)->Arg(100)->Arg(1000)->Arg(10000);
BENCHMARK(BM_ResidualParallel)->Arg(100)->Arg(1000)->Arg(10000);
BENCHMARK(BM_NormTransportSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_NormTransportParallel)->Arg(1000)->Arg(10000);
BENCHMARK(BM_SamplesSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_SamplesParallel)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
