#pragma once

// Exhaustive irregularity strength for tiny graphs by backtracking over edge
// weights in EdgeId order, weights ascending.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "irreg/graph.hpp"
#include "irreg/weighting.hpp"

namespace irreg {

class ExactBudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ExactResult {
    std::optional<Weight> s; // empty: infinite strength
    std::optional<EdgeWeighting> witness;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Tries k = degree_lower_bound(g), ..., k_max. Throws ExactBudgetError when
// the node budget runs out or no k <= k_max works.
ExactResult exact_strength(const Graph& g, Weight k_max, std::uint64_t node_budget = kDefaultNodeBudget);
// k_max = max(n, 2).
ExactResult exact_strength(const Graph& g);

// Searches only k; returns an irregular weighting with all weights <= k if one exists.
std::optional<EdgeWeighting> irregular_weighting_within(const Graph& g, Weight k, std::uint64_t& nodes,
                                                        std::uint64_t node_budget = kDefaultNodeBudget);

// True iff w is irregular and its largest weight equals s(g). Throws
// InfiniteStrengthError for graphs of infinite strength.
bool certify_optimal(const Graph& g, const EdgeWeighting& w, std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace irreg
