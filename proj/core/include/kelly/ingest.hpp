#pragma once

#include "kelly/payoff_dist.hpp"

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <vector>

namespace kelly {

enum class Outcome { Win, Loss };

struct TradeRecord {
    Outcome outcome = Outcome::Loss;
    double payoff = 0.0;  // realized b; meaningful only for wins

    static TradeRecord win(double b) { return {Outcome::Win, b}; }
    static TradeRecord loss() { return {Outcome::Loss, 0.0}; }

    friend bool operator==(const TradeRecord&, const TradeRecord&) = default;
};

/// Reads `outcome,payoff` rows. Outcome is win/loss in any case; the payoff
/// may be empty on loss rows and is ignored there. An optional header row is
/// skipped, blank lines are ignored, CRLF endings are accepted.
///
/// Every malformed row is collected before throwing ParseError, so the report
/// lists all offending line numbers. Throws EmptyFile when no records remain
/// and IoError when the file cannot be opened.
std::vector<TradeRecord> load_trades(const std::filesystem::path& path);
std::vector<TradeRecord> read_trades(std::istream& in);

struct EmpiricalSummary {
    double p_hat = 0.0;
    PayoffDistribution dist = PayoffDistribution::dirac(0.0);
    std::size_t n_wins = 0;
    std::size_t n_losses = 0;
};

// Win frequency and payoff distribution from the same record stream. Without
// bins the distribution is exact atoms (duplicates merged, ascending payoff);
// with bins it is an equal-width histogram over [min, max] of the win
// payoffs. Throws DegenerateSample without at least one win and one loss.
EmpiricalSummary build_empirical(const std::vector<TradeRecord>& records,
                                 std::optional<int> bins = std::nullopt);

/// Maximum-likelihood Pareto exponent from the payoffs strictly above xmin:
/// alpha = n_tail / sum(log(b / xmin)).
///
/// Throws InvalidArgument for xmin <= 0, InsufficientTail for fewer than ten
/// tail points, and InfiniteMeanFit when the estimate is <= 1.
Pareto fit_pareto_tail(const std::vector<double>& win_payoffs, double xmin);

}  // namespace kelly
