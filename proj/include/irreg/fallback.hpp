#pragma once

// Randomized local search for an irregular weighting of any finite-strength
// graph, used when the construction's guards fail.

#include <cstdint>

#include "irreg/graph.hpp"
#include "irreg/weighting.hpp"

namespace irreg {

struct FallbackConfig {
    // A restart happens after stagnation_factor * m moves without improvement.
    std::size_t stagnation_factor = 50;
    // k grows by one after this many restarts.
    std::size_t restarts_per_k = 20;
    // Chance of taking a move that leaves the collision count unchanged.
    double equal_move_probability = 0.1;
};

// Starts at k = max(k_start, degree_lower_bound(g)). Throws
// InfiniteStrengthError when no irregular weighting exists.
EdgeWeighting fallback_greedy(const Graph& g, std::uint64_t seed, Weight k_start = 1,
                              const FallbackConfig& config = {});

} // namespace irreg
