#include "kelly/kelly.hpp"

#include "kelly/errors.hpp"
#include "kelly/numeric.hpp"

#include <cmath>

namespace kelly {

namespace {

void check_fraction(double f, const char* where) {
    if (!std::isfinite(f) || f < 0.0 || f >= 1.0) {
        throw DomainError(std::string(where) + ": fraction " + format_significant(f, 17) +
                          " outside [0, 1)");
    }
}

// Gaps below the solver resolution are not meaningful; report them as zero.
// Anything more negative than this would contradict the Jensen bound.
constexpr double kGapFloor = -1e-9;

double resolve_gap(double gap, double tol) {
    if (std::abs(gap) <= tol) return 0.0;
    return gap;
}

}  // namespace

GameSpec::GameSpec(double p, PayoffDistribution dist, DistOptions opts)
    : p_(p), dist_(std::move(dist)), opts_(opts) {
    if (!std::isfinite(p) || p <= 0.0 || p >= 1.0) {
        throw InvalidArgument("win probability " + format_significant(p, 17) +
                              " must satisfy 0 < p < 1");
    }
    require_valid(dist_, opts_);
    mean_ = kelly::mean_payoff(dist_, opts_);
}

EdgeReport edge(const GameSpec& game) {
    const double e = game.p() * (1.0 + game.mean_payoff()) - 1.0;
    return {e, e > 0.0};
}

double classical_fraction(double p, double b) {
    if (!std::isfinite(p) || p <= 0.0 || p >= 1.0) {
        throw InvalidArgument("win probability must satisfy 0 < p < 1");
    }
    if (!std::isfinite(b) || b <= 0.0) {
        throw InvalidOdds("payoff odds " + format_significant(b, 17) + " must be positive");
    }
    const double e = p * (1.0 + b) - 1.0;
    if (!(e > 0.0)) throw NotFavorable(e);
    return e / b;
}

double growth_rate(const GameSpec& game, double f) {
    check_fraction(f, "growth_rate");
    if (f == 0.0) return 0.0;
    return game.q() * std::log1p(-f) + game.p() * log_growth_win(game.dist(), f, game.options());
}

double growth_derivative(const GameSpec& game, double f) {
    check_fraction(f, "growth_derivative");
    return game.p() * payoff_transform(game.dist(), f, game.options()) - game.q() / (1.0 - f);
}

KellySolution solve_kelly(const GameSpec& game, const SolverOptions& opts) {
    if (!(opts.tol > 0.0)) throw InvalidArgument("solver tolerance must be positive");
    if (!(opts.upper_margin > 0.0 && opts.upper_margin < 1.0)) {
        throw InvalidArgument("solver upper margin must lie in (0, 1)");
    }

    KellySolution sol;
    const EdgeReport er = edge(game);
    sol.edge = er.edge;
    if (!er.favorable) {
        sol.status = SolveStatus::NoBet;
        sol.residual = growth_derivative(game, 0.0);
        return sol;
    }

    // g'(0) = edge > 0 and g'(1 - margin) < 0 for every supported distribution.
    double lo = 0.0;
    double hi = 1.0 - opts.upper_margin;
    double f = 0.5 * (lo + hi);
    double resid = 0.0;
    bool done = false;
    int it = 0;
    while (it < opts.max_iterations) {
        ++it;
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            f = mid;
            resid = growth_derivative(game, f);
            done = true;
            break;
        }
        if (growth_derivative(game, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= opts.tol) {
            f = 0.5 * (lo + hi);
            resid = growth_derivative(game, f);
            if (std::abs(resid) <= opts.tol) {
                done = true;
                break;
            }
        }
    }
    if (!done) {
        f = 0.5 * (lo + hi);
        throw NonConvergence("solve_kelly: bisection iteration cap reached", f, hi - lo);
    }

    sol.status = SolveStatus::Solved;
    sol.f_hat = f;
    sol.residual = resid;
    sol.growth = growth_rate(game, f);
    sol.f_star_mean = classical_fraction(game.p(), game.mean_payoff());
    sol.jensen_gap = resolve_gap(sol.f_star_mean - f, opts.tol);
    sol.iterations = it;
    return sol;
}

JensenComparison jensen_compare(const GameSpec& game, const SolverOptions& opts) {
    const EdgeReport er = edge(game);
    if (!er.favorable) throw NotFavorable(er.edge);
    const KellySolution sol = solve_kelly(game, opts);
    if (sol.jensen_gap < kGapFloor) {
        throw ConsistencyFailure("solved fraction exceeds the mean-payoff fraction", sol.f_hat,
                                 sol.f_star_mean);
    }
    return {sol.f_hat, sol.f_star_mean, sol.jensen_gap < 0.0 ? 0.0 : sol.jensen_gap};
}

std::vector<GrowthPoint> growth_curve(const GameSpec& game, int m) {
    if (m < 2) throw InvalidArgument("growth_curve needs m >= 2");
    std::vector<GrowthPoint> curve;
    curve.reserve(static_cast<std::size_t>(m) + 1);
    const double denom = static_cast<double>(m) + 1.0;
    for (int j = 0; j <= m; ++j) {
        const double f = static_cast<double>(j) / denom;
        curve.push_back({f, growth_rate(game, f)});
    }
    return curve;
}

}  // namespace kelly
