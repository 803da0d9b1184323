#include "cli.hpp"

#include "kelly/dist_json.hpp"
#include "kelly/errors.hpp"
#include "kelly/ingest.hpp"
#include "kelly/kelly.hpp"
#include "kelly/mc_sim.hpp"
#include "kelly/numeric.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

namespace kelly::cli {

namespace {

using ojson = nlohmann::ordered_json;

// 12 significant digits; the shortest round-trip printer then emits no more.
ojson num(double x) {
    if (x == 0.0) return 0.0;
    return round_significant(x, 12);
}

GameSpec make_game(const GameArgs& args) {
    return GameSpec(args.p, parse_dist(args.dist_json), args.dist_opts);
}

// Runs body, converting any exception into a diagnostic and an exit code.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

const char* status_name(SolveStatus s) { return s == SolveStatus::Solved ? "solved" : "no_bet"; }

}  // namespace

int exit_code_for(const std::exception& e) noexcept {
    if (dynamic_cast<const DegenerateSample*>(&e)) return kDegenerateData;
    if (dynamic_cast<const NotFavorable*>(&e)) return kNotFavorable;
    if (dynamic_cast<const NonConvergence*>(&e)) return kNonConvergence;
    if (dynamic_cast<const ConsistencyFailure*>(&e)) return kNonConvergence;
    if (dynamic_cast<const InvalidArgument*>(&e)) return kInvalidInput;
    return kInternal;
}

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const GameSpec game = make_game(args.game);
        SolverOptions opts;
        opts.tol = args.tol;
        const KellySolution sol = solve_kelly(game, opts);
        ojson j;
        j["status"] = status_name(sol.status);
        j["f_hat"] = num(sol.f_hat);
        j["growth"] = num(sol.growth);
        j["residual"] = num(sol.residual);
        j["f_star_mean"] = num(sol.f_star_mean);
        j["jensen_gap"] = num(sol.jensen_gap);
        j["edge"] = num(sol.edge);
        out << j.dump(2) << '\n';
        return kOk;
    });
}

int run_curve(const CurveArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const GameSpec game = make_game(args.game);
        const std::vector<GrowthPoint> curve = growth_curve(game, args.m);
        std::ostringstream csv;
        csv << "f,g\n";
        for (const GrowthPoint& pt : curve) {
            csv << format_significant(pt.f == 0.0 ? 0.0 : pt.f) << ','
                << format_significant(pt.g == 0.0 ? 0.0 : pt.g) << '\n';
        }
        out << csv.str();
        return kOk;
    });
}

int run_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const GameSpec game = make_game(args.game);
        SimConfig cfg;
        cfg.f = args.f;
        cfg.n_rounds = args.n_rounds;
        cfg.n_paths = args.n_paths;
        cfg.seed = args.seed;
        cfg.x0 = args.x0;
        cfg.threads = args.threads;
        const SimResult r = simulate(game, cfg);

        ojson rates = ojson::array();
        for (double g : r.growth_rates) rates.push_back(num(g));
        ojson j;
        j["f"] = num(r.f);
        j["n_rounds"] = cfg.n_rounds;
        j["n_paths"] = cfg.n_paths;
        j["seed"] = r.seed;
        j["x0"] = num(cfg.x0);
        j["mean_growth"] = num(r.mean_growth);
        j["std_growth"] = num(r.std_growth);
        j["min_log_final_bankroll"] = num(r.min_log_final);
        j["max_log_final_bankroll"] = num(r.max_log_final);
        j["growth_rates"] = std::move(rates);
        out << j.dump(2) << '\n';
        return kOk;
    });
}

int run_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const GameSpec game = make_game(args.game);
        SolverOptions opts;
        opts.tol = args.tol;
        const JensenComparison c = jensen_compare(game, opts);
        ojson j;
        j["f_hat"] = num(c.f_hat);
        j["f_star"] = num(c.f_star);
        j["gap"] = num(c.gap);
        out << j.dump(2) << '\n';
        return kOk;
    });
}

int run_ingest(const IngestArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const std::vector<TradeRecord> records = load_trades(args.csv_path);
        const EmpiricalSummary summary = build_empirical(records, args.bins);
        ojson j;
        j["p_hat"] = num(summary.p_hat);
        // Full precision so the masses still sum to 1 when read back.
        j["dist_spec"] = ojson::parse(dist_to_json(summary.dist).dump());
        j["n_wins"] = summary.n_wins;
        j["n_losses"] = summary.n_losses;
        out << j.dump(2) << '\n';
        return kOk;
    });
}

namespace {

struct GameFlags {
    double p = 0.0;
    std::string dist;
    std::string dist_file;
    DistOptions opts;
};

void add_game_flags(CLI::App* cmd, GameFlags& flags) {
    cmd->add_option("--p", flags.p, "Win probability, 0 < p < 1")->required();
    auto* inline_opt = cmd->add_option("--dist", flags.dist, "Payoff distribution as inline JSON");
    auto* file_opt =
        cmd->add_option("--dist-file", flags.dist_file, "Path to a payoff distribution JSON file");
    inline_opt->excludes(file_opt);
    cmd->add_option("--quad-tol", flags.opts.quad_abs_tol, "Quadrature absolute tolerance")
        ->capture_default_str();
    cmd->add_option("--mass-tol", flags.opts.mass_tol, "Probability mass tolerance")
        ->capture_default_str();
}

GameArgs resolve_game(const GameFlags& flags) {
    GameArgs g;
    g.p = flags.p;
    g.dist_opts = flags.opts;
    if (!flags.dist.empty()) {
        g.dist_json = flags.dist;
    } else if (!flags.dist_file.empty()) {
        std::ifstream in(flags.dist_file, std::ios::binary);
        if (!in) throw IoError("cannot open distribution file " + flags.dist_file);
        g.dist_json.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        throw InvalidArgument("one of --dist or --dist-file is required");
    }
    return g;
}

// Sends command output to --out when given, stdout otherwise.
int with_output(const std::string& path, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
    if (path.empty()) return body(out);
    std::ostringstream buffer;
    const int code = body(buffer);
    if (code != kOk) return code;
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << path << '\n';
        return kInvalidInput;
    }
    file << buffer.str();
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Growth-optimal bet sizing for games with random payoffs"};
    app.name("kelly");
    app.require_subcommand(1);

    GameFlags solve_flags, curve_flags, sim_flags, compare_flags;
    SolveArgs solve_args;
    CurveArgs curve_args;
    SimulateArgs sim_args;
    CompareArgs compare_args;
    IngestArgs ingest_args;
    int bins = 0;
    std::string out_path;

    auto* solve = app.add_subcommand("solve", "Solve for the growth-optimal fraction");
    add_game_flags(solve, solve_flags);
    solve->add_option("--tol", solve_args.tol, "Tolerance on f")->capture_default_str();
    solve->add_option("--out", out_path, "Write output to this file");

    auto* curve = app.add_subcommand("curve", "Sample the growth rate g(f) as CSV");
    add_game_flags(curve, curve_flags);
    curve->add_option("--m", curve_args.m, "Samples at f = j/(m+1), j = 0..m")
        ->capture_default_str();
    curve->add_option("--out", out_path, "Write output to this file");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo bankroll simulation");
    add_game_flags(sim, sim_flags);
    sim->add_option("--f", sim_args.f, "Betting fraction in [0, 1)")->required();
    sim->add_option("--rounds", sim_args.n_rounds, "Rounds per path")->capture_default_str();
    sim->add_option("--paths", sim_args.n_paths, "Independent paths")->capture_default_str();
    sim->add_option("--seed", sim_args.seed, "Random seed")->capture_default_str();
    sim->add_option("--x0", sim_args.x0, "Initial bankroll")->capture_default_str();
    sim->add_option("--threads", sim_args.threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    sim->add_option("--out", out_path, "Write output to this file");

    auto* compare = app.add_subcommand("compare", "Compare against the mean-payoff fraction");
    add_game_flags(compare, compare_flags);
    compare->add_option("--tol", compare_args.tol, "Tolerance on f")->capture_default_str();
    compare->add_option("--out", out_path, "Write output to this file");

    auto* ingest = app.add_subcommand("ingest", "Build an empirical game from a trade CSV");
    ingest->add_option("csv", ingest_args.csv_path, "Trade CSV (outcome,payoff)")->required();
    auto* bins_opt = ingest->add_option("--bins", bins, "Bin win payoffs into a histogram");
    ingest->add_option("--out", out_path, "Write output to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (solve->parsed()) {
            solve_args.game = resolve_game(solve_flags);
            return with_output(out_path, out, err,
                               [&](std::ostream& o) { return run_solve(solve_args, o, err); });
        }
        if (curve->parsed()) {
            curve_args.game = resolve_game(curve_flags);
            return with_output(out_path, out, err,
                               [&](std::ostream& o) { return run_curve(curve_args, o, err); });
        }
        if (sim->parsed()) {
            sim_args.game = resolve_game(sim_flags);
            return with_output(out_path, out, err,
                               [&](std::ostream& o) { return run_simulate(sim_args, o, err); });
        }
        if (compare->parsed()) {
            compare_args.game = resolve_game(compare_flags);
            return with_output(out_path, out, err,
                               [&](std::ostream& o) { return run_compare(compare_args, o, err); });
        }
        if (ingest->parsed()) {
            if (bins_opt->count() > 0) ingest_args.bins = bins;
            return with_output(out_path, out, err,
                               [&](std::ostream& o) { return run_ingest(ingest_args, o, err); });
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kInvalidInput;
}

}  // namespace kelly::cli
