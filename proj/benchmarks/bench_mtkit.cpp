#include <benchmark/benchmark.h>

#include "mtkit/census.hpp"
#include "mtkit/enumerate.hpp"
#include "mtkit/envelope.hpp"
#include "mtkit/functor.hpp"
#include "mtkit/separation.hpp"

using namespace mtkit;

namespace {

FinSpace sample_space(int n) { return sample_topologies(n, 1, 0xbe4c)[0]; }

void BM_Interior(benchmark::State& state) {
  const FinSpace s = sample_space(static_cast<int>(state.range(0)));
  Mask a = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.interior(a));
    a = (a + 0x9e37u) & s.full();
  }
}
BENCHMARK(BM_Interior)->Arg(4)->Arg(8)->Arg(16);

void BM_InteriorByScan(benchmark::State& state) {
  const FinSpace s = sample_space(static_cast<int>(state.range(0)));
  Mask a = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.interior_by_scan(a));
    a = (a + 0x9e37u) & s.full();
  }
}
BENCHMARK(BM_InteriorByScan)->Arg(4)->Arg(8)->Arg(16);

void BM_Classify(benchmark::State& state) {
  const FinSpace s = sample_space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(4)->Arg(5);

void BM_EnumerateTopologies(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_topologies(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateTopologies)->Arg(3)->Arg(4);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Census)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CompletelyBelowFixpoint(benchmark::State& state) {
  const FinSpace s = sample_space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mt_completely_matrix(s));
}
BENCHMARK(BM_CompletelyBelowFixpoint)->Arg(4)->Arg(6)->Arg(8);

void BM_EnvelopeRoundTrip(benchmark::State& state) {
  const FinSpace s = sample_space(static_cast<int>(state.range(0)));
  const OpenFrame of = omega(s);
  for (auto _ : state) benchmark::DoNotOptimize(mt_from_frame(of.frame));
}
BENCHMARK(BM_EnvelopeRoundTrip)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
