// Serial reference vs OpenMP kernels: exhaustive search and parameter sweep.

#include <benchmark/benchmark.h>

#include "dara/experiment.hpp"
#include "dara/policies.hpp"
#include "helpers.hpp"

namespace {

dara::RabConfig exhaustive_block(int slots) {
    return dara::test::block_of({dara::exponential_profile(0.7, slots), dara::exponential_profile(0.8, slots),
                                 dara::exponential_profile(0.9, slots)});
}

void BM_ExhaustiveSerial(benchmark::State& state) {
    const auto cfg = exhaustive_block(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dara::optimal_exhaustive_serial(cfg, dara::Objective::MaxMin));
}

void BM_ExhaustiveParallel(benchmark::State& state) {
    const auto cfg = exhaustive_block(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dara::optimal_exhaustive(cfg, dara::Objective::MaxMin));
}

dara::ExperimentConfig sweep_base() {
    dara::ExperimentConfig c;
    c.scenario = "bench";
    c.T = 500;
    c.profiles.delta = 0.99;
    c.h.kind = dara::HDistribution::Kind::Normal;
    c.h.mean = 200;
    c.h.stddev = 20;
    c.seed = 1;
    c.policies = {dara::Policy::Dara, dara::Policy::RoundRobin, dara::Policy::RateRoundRobin,
                  dara::Policy::RateDelayRoundRobin};
    return c;
}

const dara::SweepAxis kAxis{dara::SweepAxis::Kind::N, {2, 3, 4, 5, 6, 7, 8, 9, 10}};

void BM_SweepSerial(benchmark::State& state) {
    const auto base = sweep_base();
    for (auto _ : state) benchmark::DoNotOptimize(dara::sweep_serial(base, kAxis, static_cast<int>(state.range(0))));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto base = sweep_base();
    for (auto _ : state) benchmark::DoNotOptimize(dara::sweep(base, kAxis, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_ExhaustiveSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExhaustiveParallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
