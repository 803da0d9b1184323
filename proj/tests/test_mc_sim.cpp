#include "kelly/errors.hpp"
#include "kelly/mc_sim.hpp"
#include "support/random_games.hpp"

#include <gtest/gtest.h>

#include <cmath>

using kelly::GameSpec;
using kelly::SimConfig;
using Dist = kelly::PayoffDistribution;

namespace {

SimConfig config(double f, std::int64_t rounds, std::int64_t paths, std::uint64_t seed = 17) {
    SimConfig cfg;
    cfg.f = f;
    cfg.n_rounds = rounds;
    cfg.n_paths = paths;
    cfg.seed = seed;
    return cfg;
}

const GameSpec kCoin(0.6, Dist::dirac(1.0));

}  // namespace

TEST(Simulate, ZeroStakeLeavesBankrollUntouched) {
    kelly::testing::GameFactory factory(3);
    const Dist d = factory.any();
    const auto r = kelly::simulate(GameSpec(0.5, d), config(0.0, 500, 8));
    for (double g : r.growth_rates) EXPECT_EQ(g, 0.0);
    EXPECT_EQ(r.mean_growth, 0.0);
    EXPECT_EQ(r.std_growth, 0.0);
    EXPECT_EQ(r.min_log_final, 0.0);
}

TEST(Simulate, MatchesGrowthRateAtClassicalOptimum) {
    const double g = 0.6 * std::log(1.2) + 0.4 * std::log(0.8);
    const auto r = kelly::simulate(kCoin, config(0.2, 100'000, 64));
    ASSERT_EQ(r.growth_rates.size(), 64u);
    EXPECT_NEAR(r.mean_growth, g, 3.0 * r.std_growth / 8.0);
}

TEST(Simulate, OverbettingDestroysGrowth) {
    const double g = 0.6 * std::log(1.9) + 0.4 * std::log(0.1);
    EXPECT_NEAR(g, -0.536, 5e-4);
    const auto r = kelly::simulate(kCoin, config(0.9, 20'000, 16));
    EXPECT_LT(r.mean_growth, 0.0);
    EXPECT_NEAR(r.mean_growth, g, 4.0 * r.std_growth / 4.0);
}

TEST(Simulate, BankrollsStayPositiveInLogDomain) {
    SimConfig cfg = config(0.95, 200'000, 4);
    cfg.x0 = 10.0;
    const auto r = kelly::simulate(kCoin, cfg);
    // exp() of these would underflow; the log bankroll stays finite.
    EXPECT_TRUE(std::isfinite(r.min_log_final));
    EXPECT_LT(r.max_log_final, -1000.0);
    EXPECT_NEAR(r.min_log_final, std::log(10.0) + 200'000 * *std::min_element(r.growth_rates.begin(), r.growth_rates.end()), 1e-6);
}

TEST(Simulate, BitIdenticalAcrossThreadCounts) {
    kelly::testing::GameFactory factory(8);
    const Dist d = factory.any();
    const GameSpec game(factory.favorable_p(d), d);
    SimConfig cfg = config(0.1, 5'000, 13, 0xdeadbeef);
    cfg.threads = 1;
    const auto serial = kelly::simulate(game, cfg);
    for (unsigned t : {2u, 3u, 8u, 0u}) {
        cfg.threads = t;
        const auto par = kelly::simulate(game, cfg);
        EXPECT_EQ(par.growth_rates, serial.growth_rates) << t << " threads";
        EXPECT_EQ(par.mean_growth, serial.mean_growth);
        EXPECT_EQ(par.std_growth, serial.std_growth);
    }
}

TEST(Simulate, SeedChangesDraws) {
    const auto a = kelly::simulate(kCoin, config(0.2, 1000, 2, 1));
    const auto b = kelly::simulate(kCoin, config(0.2, 1000, 2, 2));
    EXPECT_NE(a.growth_rates, b.growth_rates);
    EXPECT_EQ(a.seed, 1u);
}

TEST(Simulate, AgreesWithGrowthRateOnRandomGames) {
    kelly::testing::GameFactory factory(1234);
    for (int i = 0; i < 6; ++i) {
        const Dist d = factory.any();
        const GameSpec game(factory.favorable_p(d), d);
        const double f = factory.uniform(0.05, 0.6);
        const auto r = kelly::simulate(game, config(f, 100'000, 64, 500 + static_cast<std::uint64_t>(i)));
        EXPECT_NEAR(r.mean_growth, kelly::growth_rate(game, f), 4.0 * r.std_growth / 8.0)
            << "game " << i;
    }
}

TEST(Simulate, SpreadShrinksWithRounds) {
    const auto short_run = kelly::simulate(kCoin, config(0.2, 1'000, 64));
    const auto long_run = kelly::simulate(kCoin, config(0.2, 100'000, 64));
    const double ratio = short_run.std_growth / long_run.std_growth;
    EXPECT_GT(ratio, 5.0);
    EXPECT_LT(ratio, 20.0);
    const double g = kelly::growth_rate(kCoin, 0.2);
    EXPECT_LE(std::abs(long_run.mean_growth - g), 4.0 * long_run.std_growth / 8.0);
}

TEST(Simulate, RejectsBadConfig) {
    EXPECT_THROW(kelly::simulate(kCoin, config(1.0, 10, 1)), kelly::DomainError);
    EXPECT_THROW(kelly::simulate(kCoin, config(0.1, 0, 1)), kelly::InvalidArgument);
    EXPECT_THROW(kelly::simulate(kCoin, config(0.1, 10, 0)), kelly::InvalidArgument);
    SimConfig cfg = config(0.1, 10, 1);
    cfg.x0 = 0.0;
    EXPECT_THROW(kelly::simulate(kCoin, cfg), kelly::InvalidArgument);
}

TEST(SimulateGrid, MatchesIndividualRunsWithSameSeed) {
    const std::vector<double> fs{0.0, 0.1, 0.3};
    const SimConfig cfg = config(0.0, 2'000, 5, 77);
    const auto grid = kelly::simulate_grid(kCoin, cfg, fs);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        SimConfig single = cfg;
        single.f = fs[i];
        EXPECT_EQ(grid[i].growth_rates, kelly::simulate(kCoin, single).growth_rates);
    }
}

TEST(GridArgmax, UnfavorableGamePicksZero) {
    EXPECT_EQ(kelly::grid_argmax(GameSpec(0.4, Dist::dirac(1.0)), 19, config(0.0, 10'000, 16)), 0.0);
}

TEST(GridArgmax, CoinFindsClassicalOptimum) {
    const double f = kelly::grid_argmax(kCoin, 19, config(0.0, 100'000, 64));
    EXPECT_NEAR(f, 0.2, 0.05 + 1e-12);
}

TEST(GridArgmax, TwoAtomFindsSolvedOptimum) {
    const GameSpec game(0.6, Dist::atoms({{1.0, 0.5}, {2.0, 0.5}}));
    const double f_hat = kelly::solve_kelly(game).f_hat;
    const double f = kelly::grid_argmax(game, 39, config(0.0, 100'000, 32));
    EXPECT_LE(std::abs(f - f_hat), 1.0 / 40.0 + 1e-12);
}

TEST(GridArgmax, CommonRandomNumbersGiveSinglePeak) {
    kelly::testing::GameFactory factory(2718);
    for (int i = 0; i < 4; ++i) {
        const Dist d = factory.any();
        const GameSpec game(factory.favorable_p(d, 0.2, 0.7), d);
        const auto grid = kelly::fraction_grid(19);
        const auto results = kelly::simulate_grid(game, config(0.0, 20'000, 32, 9 + static_cast<std::uint64_t>(i)), grid);
        std::size_t peak = 0;
        for (std::size_t j = 1; j < results.size(); ++j) {
            if (results[j].mean_growth > results[peak].mean_growth) peak = j;
        }
        for (std::size_t j = 1; j < results.size(); ++j) {
            const double noise = 2.0 * results[j].std_growth / std::sqrt(32.0);
            if (j <= peak) {
                EXPECT_GE(results[j].mean_growth, results[j - 1].mean_growth - noise);
            } else {
                EXPECT_LE(results[j].mean_growth, results[j - 1].mean_growth + noise);
            }
        }
    }
}

TEST(GridArgmax, NeedsThreePoints) {
    EXPECT_THROW(kelly::grid_argmax(kCoin, 2, config(0.0, 10, 1)), kelly::InvalidArgument);
    EXPECT_EQ(kelly::fraction_grid(3), (std::vector<double>{0.0, 0.25, 0.5, 0.75}));
}
