#pragma once

#include "kelly/kelly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace kelly {

struct SimConfig {
    std::int64_t n_rounds = 1000;
    std::int64_t n_paths = 1;
    double f = 0.0;
    std::uint64_t seed = 0;
    double x0 = 1.0;
    // Worker threads; 0 picks std::thread::hardware_concurrency(). Results do
    // not depend on this value.
    unsigned threads = 1;
};

struct SimResult {
    double f = 0.0;
    std::vector<double> growth_rates;  // per path, G_n = log(X_n / X_0) / n
    double mean_growth = 0.0;
    double std_growth = 0.0;           // sample standard deviation across paths
    // Bankrolls are tracked in the log domain; X_n = exp(log_final).
    double min_log_final = 0.0;
    double max_log_final = 0.0;
    std::uint64_t seed = 0;
};

/// Plays n_paths independent sequences of n_rounds. Each round wins with
/// probability p and multiplies the bankroll by 1 + b f with b drawn from the
/// payoff distribution, or loses and multiplies it by 1 - f.
///
/// Path k draws from RandomState::substream(seed, k) and always consumes one
/// variate for the outcome and one more for the payoff on a win, independent
/// of f. Output is bit-identical for every thread count.
SimResult simulate(const GameSpec& game, const SimConfig& cfg);

// simulate() at several fractions over the same draws (common random numbers).
// cfg.f is ignored.
std::vector<SimResult> simulate_grid(const GameSpec& game, const SimConfig& cfg,
                                     std::span<const double> fractions);

// Fractions j / (grid_size + 1) for j = 0..grid_size.
std::vector<double> fraction_grid(int grid_size);

/// Runs simulate_grid over fraction_grid(grid_size) and returns the fraction
/// with the largest mean growth (ties go to the smaller fraction).
/// Requires grid_size >= 3.
double grid_argmax(const GameSpec& game, int grid_size, const SimConfig& cfg);

}  // namespace kelly
