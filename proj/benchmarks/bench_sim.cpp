#include "kelly/mc_sim.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Simulate(benchmark::State& state) {
    const kelly::GameSpec game(0.6, kelly::PayoffDistribution::atoms({{1.0, 0.5}, {2.0, 0.5}}));
    kelly::SimConfig cfg;
    cfg.f = 0.3;
    cfg.n_rounds = 10'000;
    cfg.n_paths = 16;
    cfg.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kelly::simulate(game, cfg).mean_growth);
    state.SetItemsProcessed(state.iterations() * cfg.n_rounds * cfg.n_paths);
}
BENCHMARK(BM_Simulate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
