#pragma once

#include "kelly/payoff_dist.hpp"

#include <vector>

namespace kelly {

// A repeated game: win with probability p and collect a random payoff b
// drawn from dist; lose with probability q = 1 - p and forfeit the stake.
class GameSpec {
public:
    // Throws InvalidArgument unless 0 < p < 1, and InvalidDistribution for an
    // invalid dist.
    GameSpec(double p, PayoffDistribution dist, DistOptions opts = {});

    double p() const noexcept { return p_; }
    double q() const noexcept { return 1.0 - p_; }
    const PayoffDistribution& dist() const noexcept { return dist_; }
    const DistOptions& options() const noexcept { return opts_; }

    // b-bar, cached at construction.
    double mean_payoff() const noexcept { return mean_; }

private:
    double p_;
    PayoffDistribution dist_;
    DistOptions opts_;
    double mean_;
};

struct EdgeReport {
    double edge = 0.0;  // p (1 + b-bar) - 1, expected gain per unit staked
    bool favorable = false;
};

EdgeReport edge(const GameSpec& game);

/// Closed-form optimum (p (1 + b) - 1) / b for a constant payoff b.
/// Throws InvalidOdds if b <= 0 and NotFavorable if p (1 + b) <= 1.
double classical_fraction(double p, double b);

// g(f) = q log(1 - f) + p E[log(1 + b f)]. Throws DomainError unless 0 <= f < 1.
double growth_rate(const GameSpec& game, double f);

// g'(f) = p E[b / (1 + b f)] - q / (1 - f). Strictly decreasing on [0, 1).
double growth_derivative(const GameSpec& game, double f);

enum class SolveStatus { Solved, NoBet };

struct KellySolution {
    SolveStatus status = SolveStatus::NoBet;
    double f_hat = 0.0;
    double growth = 0.0;     // g(f_hat)
    double residual = 0.0;   // g'(f_hat)
    double f_star_mean = 0.0;  // classical fraction at the mean payoff; 0 for NoBet
    double jensen_gap = 0.0;   // f_star_mean - f_hat
    double edge = 0.0;
    int iterations = 0;
};

struct SolverOptions {
    double tol = 1e-10;          // on f, and on |g'(f_hat)|
    int max_iterations = 200;
    double upper_margin = 1e-12;  // bracket is [0, 1 - upper_margin]
};

/// Solves p E[b / (1 + b f)] = q / (1 - f) for the growth-optimal fraction.
///
/// Unfavorable games (edge <= 0, the fair boundary included) return NoBet
/// with f_hat = 0. Otherwise g' is positive at 0, strictly decreasing and
/// unbounded below near 1, so the root is unique and is found by bisection.
/// Iteration stops once the bracket is narrower than tol and |g'| <= tol at
/// the midpoint, or when the bracket can no longer be split in double
/// precision. Throws NonConvergence when max_iterations runs out first.
KellySolution solve_kelly(const GameSpec& game, const SolverOptions& opts = {});

struct JensenComparison {
    double f_hat = 0.0;
    double f_star = 0.0;
    double gap = 0.0;
};

// Variable-payoff optimum against the classical fraction at the mean payoff.
// Throws NotFavorable for edge <= 0.
JensenComparison jensen_compare(const GameSpec& game, const SolverOptions& opts = {});

struct GrowthPoint {
    double f = 0.0;
    double g = 0.0;
};

// g sampled at f_j = j / (m + 1), j = 0..m. Requires m >= 2.
std::vector<GrowthPoint> growth_curve(const GameSpec& game, int m);

}  // namespace kelly
