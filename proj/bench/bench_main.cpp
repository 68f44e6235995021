// Serial reference vs OpenMP kernels on representative workloads.

#include "burnscan/detect.hpp"
#include "burnscan/rng.hpp"
#include "burnscan/scene.hpp"
#include "burnscan/simkit.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace burnscan;

namespace {

IndexStack synthetic_stack(int width, int height) {
    IndexStack stack;
    stack.width = width;
    stack.height = height;
    stack.n_dates = 14 * kCadence;
    stack.start_year = 2003;
    stack.values.resize(static_cast<std::size_t>(stack.n_dates) * width * height);
    const PiecewiseTrend trend({161}, {0.7, 0.3}, {0.0, 0.2 / 161.0});
    for (int t = 1; t <= stack.n_dates; ++t) {
        for (int row = 0; row < height; ++row) {
            for (int col = 0; col < width; ++col) {
                const bool burn = (row + col) % 3 == 0;
                Rng rng(derive_stream(7, (static_cast<std::uint64_t>(row) * width + col) * 400 +
                                             static_cast<std::uint64_t>(t),
                                      StreamTag::Noise));
                const double base = burn ? trend.value_at(t) : 0.6;
                stack.at(t - 1, row, col) = static_cast<float>(
                    base + 0.15 * std::cos(2.0 * std::acos(-1.0) * t / kCadence) +
                    0.02 * rng.normal());
            }
        }
    }
    return stack;
}

SimScenario bench_scenario(int replicates) {
    SimScenario s;
    s.missing_count = 97;
    s.replicates = replicates;
    s.seed = 99;
    return s;
}

void BM_experiment_serial(benchmark::State& state) {
    const SimScenario s = bench_scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment_serial(s));
    }
}

void BM_experiment_parallel(benchmark::State& state) {
    const SimScenario s = bench_scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(s));
    }
}

void BM_scene_serial(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const IndexStack stack = synthetic_stack(side, side);
    SceneDetectOptions opts;
    opts.h = 0.23;
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_scene_serial(stack, opts));
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}

void BM_scene_parallel(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const IndexStack stack = synthetic_stack(side, side);
    SceneDetectOptions opts;
    opts.h = 0.23;
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_scene(stack, opts));
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}

}  // namespace

BENCHMARK(BM_experiment_serial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_experiment_parallel)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scene_serial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scene_parallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
