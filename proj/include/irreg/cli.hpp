#pragma once

// Command-line surface: gen, solve, verify, bench.
//
// Exit codes: 0 ok, 2 usage or input error, 3 construction failure without
// fallback, 4 infinite strength, 5 invalid weighting.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "irreg/conditions.hpp"
#include "irreg/solve_report.hpp"
#include "irreg/weighting.hpp"

namespace irreg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPipeline = 3;
inline constexpr int kExitInfinite = 4;
inline constexpr int kExitInvalid = 5;

struct SolveOptions {
    std::string algo = "auto"; // paper | fallback | exact | auto
    double epsilon = 0.1;
    double gamma = 0.04;
    std::uint64_t seed = 1;
    std::size_t budget = 1000;
    ResamplePolicy policy = ResamplePolicy::moser_tardos;
};

struct SolveOutcome {
    SolveReport report;
    std::optional<EdgeWeighting> weighting;
    std::string message; // failure detail, empty on success
    int exit_code = kExitOk;
};

SolveOutcome solve_graph(const Graph& g, const SolveOptions& options);

struct GridPoint {
    std::int64_t n = 0;
    std::int64_t d = 0;
    double epsilon = 0.0;
    double gamma = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// "n=1200,2000;d=n/4,300;eps=0.1;gamma=0.04;seeds=1,2" in the nesting order
// n, d, eps, gamma, seed. A d entry "n/k" means floor(n/k). eps and gamma
// default to 0.1 and 0.04, seeds to 1. Throws std::invalid_argument.
std::vector<GridPoint> parse_grid(std::string_view spec);

struct BenchOptions {
    std::string algo = "paper";
    std::size_t budget = 1000;
    ResamplePolicy policy = ResamplePolicy::moser_tardos;
    unsigned jobs = 1;
    bool timings = true;
};

// Header plus one row per grid point, in grid order.
std::string bench_csv(const std::vector<GridPoint>& grid, const BenchOptions& options);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace irreg::cli
