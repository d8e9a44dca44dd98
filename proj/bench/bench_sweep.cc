// Serial reference kernels against their OpenMP counterparts.

#include "vasnet/experiments.h"

#include <benchmark/benchmark.h>

using namespace vasnet;

namespace
{

const std::vector<std::uint64_t> kBudgets{100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};

void
BM_SweepSerial(benchmark::State& state)
{
    const ScenarioConfig cfg;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(sweep_events_serial(cfg, kBudgets));
    }
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void
BM_SweepParallel(benchmark::State& state)
{
    const ScenarioConfig cfg;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(sweep_events(cfg, kBudgets));
    }
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void
BM_CompareSerial(benchmark::State& state)
{
    const ScenarioConfig cfg;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(compare_baseline(cfg, false));
    }
}
BENCHMARK(BM_CompareSerial)->Unit(benchmark::kMillisecond);

void
BM_CompareParallel(benchmark::State& state)
{
    const ScenarioConfig cfg;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(compare_baseline(cfg, true));
    }
}
BENCHMARK(BM_CompareParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

LocalizationTrials
trials_spec()
{
    LocalizationTrials setup;
    setup.anchors = 6;
    setup.noise_sigma = 1.0;
    setup.trials = 20000;
    return setup;
}

void
BM_LocalizationSerial(benchmark::State& state)
{
    const auto setup = trials_spec();
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(localization_trials_serial(setup));
    }
}
BENCHMARK(BM_LocalizationSerial)->Unit(benchmark::kMillisecond);

void
BM_LocalizationParallel(benchmark::State& state)
{
    const auto setup = trials_spec();
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(localization_trials(setup));
    }
}
BENCHMARK(BM_LocalizationParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
