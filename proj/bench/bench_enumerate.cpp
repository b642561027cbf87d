#include "sgforge/enumerate.hpp"
#include "sgforge/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    sgforge::enumerate_by_genus_serial(g, [&](const sgforge::NumericalSemigroup&) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
  }
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto counts = sgforge::enumerate_by_genus(g, [](const sgforge::NumericalSemigroup&) {},
                                              sgforge::default_jobs());
    benchmark::DoNotOptimize(counts);
  }
}

void BM_VerifySerial(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sgforge::verify("selfdual-max", g, 1));
}

void BM_VerifyParallel(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgforge::verify("selfdual-max", g, sgforge::default_jobs()));
  }
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
