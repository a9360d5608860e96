#include <benchmark/benchmark.h>

#include "sigma/checkpoint.hpp"
#include "sigma/coeff_table.hpp"

namespace {

void BM_ComputeRectangle(benchmark::State& state) {
    const long n = state.range(0);
    const unsigned workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma::compute_rectangle(n, n, workers));
    }
}
BENCHMARK(BM_ComputeRectangle)
    ->Args({10, 1})
    ->Args({25, 1})
    ->Args({50, 1})
    ->Args({50, 2})
    ->Args({50, 4})
    ->Args({100, 4})
    ->Unit(benchmark::kMillisecond);

void BM_CheckpointSerialize(benchmark::State& state) {
    const sigma::CoeffTable table =
        sigma::compute_rectangle(state.range(0), state.range(0), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma::checkpoint_from_table(table).text());
    }
}
BENCHMARK(BM_CheckpointSerialize)->Arg(25)->Arg(50)->Unit(
    benchmark::kMillisecond);

void BM_CheckpointParse(benchmark::State& state) {
    const std::string text =
        sigma::checkpoint_from_table(
            sigma::compute_rectangle(state.range(0), state.range(0), 2))
            .text();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma::Checkpoint::parse(text));
    }
}
BENCHMARK(BM_CheckpointParse)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
