#include <benchmark/benchmark.h>

#include "d4fs/enumeration.hpp"
#include "d4fs/relations.hpp"

using namespace d4fs;

namespace {

const HighestWeight kWeight{{1, 0, 1, 0, 0}};

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible_serial(kWeight, static_cast<int>(state.range(0))));
}

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible(kWeight, static_cast<int>(state.range(0))));
}

void BM_GradedSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(graded_dimensions_serial(kWeight, static_cast<int>(state.range(0))));
}

void BM_GradedParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(graded_dimensions(kWeight, static_cast<int>(state.range(0))));
}

void BM_RelationsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_leading_terms_serial(static_cast<int>(state.range(0))));
}

void BM_RelationsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_leading_terms(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GradedSerial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GradedParallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelationsSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelationsParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
