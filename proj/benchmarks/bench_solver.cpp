#include "kelly/kelly.hpp"

#include <benchmark/benchmark.h>

namespace {

using Dist = kelly::PayoffDistribution;

void run(benchmark::State& state, const kelly::GameSpec& game) {
    for (auto _ : state) benchmark::DoNotOptimize(kelly::solve_kelly(game).f_hat);
}

void BM_SolveDirac(benchmark::State& state) {
    run(state, kelly::GameSpec(0.6, Dist::dirac(1.0)));
}
BENCHMARK(BM_SolveDirac);

void BM_SolveAtoms(benchmark::State& state) {
    run(state, kelly::GameSpec(0.6, Dist::atoms({{1.0, 0.5}, {2.0, 0.5}})));
}
BENCHMARK(BM_SolveAtoms);

void BM_SolveUniform(benchmark::State& state) {
    run(state, kelly::GameSpec(0.5, Dist::uniform(1.0, 2.0)));
}
BENCHMARK(BM_SolveUniform);

void BM_SolvePareto(benchmark::State& state) {
    run(state, kelly::GameSpec(0.5, Dist::pareto(2.5, 0.8)));
}
BENCHMARK(BM_SolvePareto);

void BM_GrowthCurve(benchmark::State& state) {
    const kelly::GameSpec game(0.5, Dist::uniform(1.0, 2.0));
    for (auto _ : state) benchmark::DoNotOptimize(kelly::growth_curve(game, 200).size());
}
BENCHMARK(BM_GrowthCurve);

}  // namespace
