#include "kelly/mc_sim.hpp"

#include "kelly/errors.hpp"
#include "kelly/numeric.hpp"
#include "kelly/random.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace kelly {

namespace {

void check_config(const SimConfig& cfg) {
    if (cfg.n_rounds < 1) throw InvalidArgument("n_rounds must be >= 1");
    if (cfg.n_paths < 1) throw InvalidArgument("n_paths must be >= 1");
    if (!std::isfinite(cfg.x0) || cfg.x0 <= 0.0) throw InvalidArgument("x0 must be positive");
}

void check_fraction(double f) {
    if (!std::isfinite(f) || f < 0.0 || f >= 1.0) {
        throw DomainError("simulation fraction " + format_significant(f, 17) +
                          " outside [0, 1)");
    }
}

// Sum of log growth factors along one path, for every fraction at once.
void play_path(const GameSpec& game, const SimConfig& cfg, std::uint64_t path,
               std::span<const double> fractions, std::span<double> log_sums) {
    RandomState rng = RandomState::substream(cfg.seed, path);
    std::fill(log_sums.begin(), log_sums.end(), 0.0);
    const double p = game.p();
    for (std::int64_t round = 0; round < cfg.n_rounds; ++round) {
        if (rng.uniform() <= p) {
            const double b = sample(game.dist(), rng);
            for (std::size_t i = 0; i < fractions.size(); ++i) {
                log_sums[i] += std::log1p(b * fractions[i]);
            }
        } else {
            for (std::size_t i = 0; i < fractions.size(); ++i) {
                log_sums[i] += std::log1p(-fractions[i]);
            }
        }
    }
}

unsigned worker_count(unsigned requested, std::int64_t n_paths) {
    unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::int64_t>(n, n_paths));
}

}  // namespace

std::vector<SimResult> simulate_grid(const GameSpec& game, const SimConfig& cfg,
                                     std::span<const double> fractions) {
    check_config(cfg);
    for (double f : fractions) check_fraction(f);
    const std::size_t nf = fractions.size();
    const auto n_paths = static_cast<std::size_t>(cfg.n_paths);

    // log_sums[path * nf + i]; each path owns its slice, so workers never share writes.
    std::vector<double> log_sums(n_paths * nf, 0.0);
    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            play_path(game, cfg, k, fractions, std::span<double>(log_sums).subspan(k * nf, nf));
        }
    };

    const unsigned workers = worker_count(cfg.threads, cfg.n_paths);
    if (workers <= 1) {
        run_range(0, n_paths);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n_paths + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(n_paths, w * chunk);
            const std::size_t end = std::min(n_paths, begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
    }

    // Reduce in path-index order.
    const double n = static_cast<double>(cfg.n_rounds);
    const double log_x0 = std::log(cfg.x0);
    std::vector<SimResult> results(nf);
    for (std::size_t i = 0; i < nf; ++i) {
        SimResult& r = results[i];
        r.f = fractions[i];
        r.seed = cfg.seed;
        r.growth_rates.resize(n_paths);
        CompensatedSum sum;
        double lo = 0.0;
        double hi = 0.0;
        for (std::size_t k = 0; k < n_paths; ++k) {
            const double s = log_sums[k * nf + i];
            r.growth_rates[k] = s / n;
            sum.add(r.growth_rates[k]);
            if (k == 0 || s < lo) lo = s;
            if (k == 0 || s > hi) hi = s;
        }
        r.mean_growth = sum.value() / static_cast<double>(n_paths);
        if (n_paths > 1) {
            CompensatedSum sq;
            for (double g : r.growth_rates) sq.add((g - r.mean_growth) * (g - r.mean_growth));
            r.std_growth = std::sqrt(sq.value() / static_cast<double>(n_paths - 1));
        }
        r.min_log_final = log_x0 + lo;
        r.max_log_final = log_x0 + hi;
    }
    return results;
}

SimResult simulate(const GameSpec& game, const SimConfig& cfg) {
    const double f = cfg.f;
    check_fraction(f);
    return std::move(simulate_grid(game, cfg, std::span<const double>(&f, 1)).front());
}

std::vector<double> fraction_grid(int grid_size) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(grid_size) + 1);
    const double denom = static_cast<double>(grid_size) + 1.0;
    for (int j = 0; j <= grid_size; ++j) grid.push_back(static_cast<double>(j) / denom);
    return grid;
}

double grid_argmax(const GameSpec& game, int grid_size, const SimConfig& cfg) {
    if (grid_size < 3) throw InvalidArgument("grid_argmax needs grid_size >= 3");
    const std::vector<double> grid = fraction_grid(grid_size);
    const std::vector<SimResult> results = simulate_grid(game, cfg, grid);
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].mean_growth > results[best].mean_growth) best = i;
    }
    return grid[best];
}

}  // namespace kelly
