#include "kelly/ingest.hpp"

#include "kelly/errors.hpp"
#include "kelly/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <string_view>

namespace kelly {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::optional<double> parse_number(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

constexpr std::size_t kMinTail = 10;

}  // namespace

std::vector<TradeRecord> read_trades(std::istream& in) {
    std::vector<TradeRecord> records;
    std::vector<RowError> errors;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_content = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
        line = trim(line);
        if (line.empty()) continue;

        const auto comma = line.find(',');
        const std::string outcome = lower(trim(line.substr(0, comma)));
        const std::string_view payoff =
            comma == std::string_view::npos ? std::string_view{} : trim(line.substr(comma + 1));
        const bool first_row = !seen_content;
        seen_content = true;

        if (outcome == "loss") {
            records.push_back(TradeRecord::loss());
            continue;
        }
        if (outcome != "win") {
            if (first_row) continue;  // header
            errors.push_back({line_no, "unknown outcome \"" + outcome + "\""});
            continue;
        }
        if (payoff.empty()) {
            errors.push_back({line_no, "missing payoff"});
            continue;
        }
        const std::optional<double> b = parse_number(payoff);
        if (!b) {
            errors.push_back({line_no, "invalid payoff \"" + std::string(payoff) + "\""});
        } else if (*b < 0.0) {
            errors.push_back({line_no, "negative payoff"});
        } else {
            records.push_back(TradeRecord::win(*b));
        }
    }

    if (!errors.empty()) throw ParseError(std::move(errors));
    if (records.empty()) throw EmptyFile("trade file contains no records");
    return records;
}

std::vector<TradeRecord> load_trades(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open trade file " + path.string());
    return read_trades(in);
}

EmpiricalSummary build_empirical(const std::vector<TradeRecord>& records, std::optional<int> bins) {
    if (bins && *bins < 1) throw InvalidArgument("bins must be a positive integer");

    std::vector<double> wins;
    std::size_t losses = 0;
    for (const TradeRecord& r : records) {
        if (r.outcome == Outcome::Win) {
            wins.push_back(r.payoff);
        } else {
            ++losses;
        }
    }
    if (wins.empty() || losses == 0) {
        throw DegenerateSample("need at least one win and one loss (got " +
                               std::to_string(wins.size()) + " wins, " + std::to_string(losses) +
                               " losses)");
    }

    EmpiricalSummary out;
    out.n_wins = wins.size();
    out.n_losses = losses;
    out.p_hat = static_cast<double>(wins.size()) / static_cast<double>(wins.size() + losses);

    const double n = static_cast<double>(wins.size());
    const auto [min_it, max_it] = std::minmax_element(wins.begin(), wins.end());
    const double lo = *min_it;
    const double hi = *max_it;

    if (bins && lo < hi) {
        const int m = *bins;
        std::vector<double> edges(static_cast<std::size_t>(m) + 1);
        const double width = (hi - lo) / m;
        for (int i = 0; i <= m; ++i) edges[static_cast<std::size_t>(i)] = lo + i * width;
        edges.back() = hi;
        std::vector<std::size_t> counts(static_cast<std::size_t>(m), 0);
        for (double b : wins) {
            auto idx = static_cast<std::size_t>((b - lo) / width);
            idx = std::min(idx, counts.size() - 1);
            ++counts[idx];
        }
        std::vector<double> masses;
        masses.reserve(counts.size());
        for (std::size_t c : counts) masses.push_back(static_cast<double>(c) / n);
        out.dist = PayoffDistribution::histogram(std::move(edges), std::move(masses));
        return out;
    }

    // A histogram cannot span a single value; identical payoffs fall back to atoms.
    std::map<double, std::size_t> counts;
    for (double b : wins) ++counts[b];
    std::vector<Atom> atoms;
    atoms.reserve(counts.size());
    for (const auto& [b, c] : counts) atoms.push_back({b, static_cast<double>(c) / n});
    out.dist = PayoffDistribution::atoms(std::move(atoms));
    return out;
}

Pareto fit_pareto_tail(const std::vector<double>& win_payoffs, double xmin) {
    if (!std::isfinite(xmin) || xmin <= 0.0) throw InvalidArgument("xmin must be positive");
    CompensatedSum log_sum;
    std::size_t n_tail = 0;
    for (double b : win_payoffs) {
        if (b > xmin) {
            log_sum.add(std::log(b / xmin));
            ++n_tail;
        }
    }
    if (n_tail < kMinTail) {
        throw InsufficientTail("need at least " + std::to_string(kMinTail) +
                               " payoffs above xmin, got " + std::to_string(n_tail));
    }
    const double alpha = static_cast<double>(n_tail) / log_sum.value();
    if (!(alpha > 1.0)) throw InfiniteMeanFit(alpha);
    return {alpha, xmin};
}

}  // namespace kelly
