#include <benchmark/benchmark.h>

#include "sigma/series_oracle.hpp"

namespace {

void BM_SigmaFromPe(benchmark::State& state) {
    const long order = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma::sigma_from_pe(order));
    }
}
BENCHMARK(BM_SigmaFromPe)->Arg(20)->Arg(30)->Arg(42)->Unit(
    benchmark::kMillisecond);

void BM_WeierstrassResidual(benchmark::State& state) {
    const long order = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma::weierstrass_residual(order));
    }
}
BENCHMARK(BM_WeierstrassResidual)->Arg(20)->Arg(30)->Unit(
    benchmark::kMillisecond);

void BM_ApplyQ2(benchmark::State& state) {
    const long order = state.range(0);
    const sigma::CoeffTable table =
        sigma::compute_rectangle((order - 2) / 4, (order - 2) / 6, 2);
    const sigma::TruncatedSeries sigma_series =
        sigma::sigma_from_table(table, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma::apply_Q2(sigma_series));
    }
}
BENCHMARK(BM_ApplyQ2)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
