#include <benchmark/benchmark.h>

#include "sigma/valuation.hpp"

namespace {

void BM_VerifyRange(benchmark::State& state) {
    const long n = state.range(0);
    const sigma::CoeffTable table = sigma::compute_rectangle(n, n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma::verify_range(table, n, n));
    }
}
BENCHMARK(BM_VerifyRange)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_NuBClosedForm(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        long acc = 0;
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j)
                acc += sigma::nu_b(i, j, 2) + sigma::nu_b(i, j, 3);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_NuBClosedForm)->Arg(100);

void BM_BValue(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma::b_value(n, n));
    }
}
BENCHMARK(BM_BValue)->Arg(10)->Arg(25);

}  // namespace
