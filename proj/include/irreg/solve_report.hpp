#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "irreg/bounds.hpp"
#include "irreg/graph.hpp"

namespace irreg {

struct ParamsEcho {
    double epsilon = 0.0;
    double gamma = 0.0;
    std::int64_t s_star = 0;
    std::int64_t omega = 0;
    double alpha = 0.0;
    std::int64_t q = 0;

    friend bool operator==(const ParamsEcho&, const ParamsEcho&) = default;
};

struct SolveReport {
    std::int64_t n = 0;
    std::optional<std::int64_t> d; // set for regular graphs
    std::string algorithm;         // paper | fallback | exact | auto
    std::optional<std::int64_t> achieved_k;
    std::int64_t safe_lower = 0;
    std::optional<std::int64_t> paper_lower;
    std::optional<double> thm_general;
    std::optional<Rational> thm_dense;
    std::optional<bool> thm_dense_applicable;
    bool valid = false;
    std::optional<std::string> stage_failure;
    std::uint64_t resamples = 0;
    std::map<std::string, double> timings_ms;
    std::uint64_t seed = 0;
    std::optional<ParamsEcho> params;

    friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

// Fills n, d, safe_lower and, for regular graphs with 1 <= d <= n-1, the
// reference bounds evaluated at beta = epsilon - 2 gamma.
void fill_bounds(SolveReport& report, const Graph& g, double epsilon, double gamma);

} // namespace irreg
