#pragma once

#include "kelly/payoff_dist.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kelly::cli {

// Process exit codes. Every library error class maps onto exactly one of these.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kInvalidInput = 2,
    kNonConvergence = 3,
    kNotFavorable = 4,
    kDegenerateData = 5,
};

int exit_code_for(const std::exception& e) noexcept;

struct GameArgs {
    double p = 0.0;
    std::string dist_json;  // inline spec text
    DistOptions dist_opts;
};

struct SolveArgs {
    GameArgs game;
    double tol = 1e-10;
};

struct CurveArgs {
    GameArgs game;
    int m = 100;
};

struct SimulateArgs {
    GameArgs game;
    double f = 0.0;
    std::int64_t n_rounds = 1000;
    std::int64_t n_paths = 64;
    std::uint64_t seed = 0;
    double x0 = 1.0;
    unsigned threads = 1;
};

struct CompareArgs {
    GameArgs game;
    double tol = 1e-10;
};

struct IngestArgs {
    std::filesystem::path csv_path;
    std::optional<int> bins;
};

// Each command writes its payload to `out` and one-line diagnostics to `err`,
// returning the exit code. They never throw.
int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int run_curve(const CurveArgs& args, std::ostream& out, std::ostream& err);
int run_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int run_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);
int run_ingest(const IngestArgs& args, std::ostream& out, std::ostream& err);

// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kelly::cli
