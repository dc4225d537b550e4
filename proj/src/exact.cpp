#include "irreg/exact.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace irreg {
namespace {

class Search {
  public:
    Search(const Graph& g, Weight k, std::uint64_t& nodes, std::uint64_t budget)
        : g_{g}, k_{k}, nodes_{nodes}, budget_{budget}, fv_(g.num_vertices(), 0),
          remaining_(g.num_vertices(), 0), w_(g.num_edges(), 0) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            remaining_[v] = static_cast<int>(g.degree(v));
        }
        taken_.assign(static_cast<std::size_t>(k * static_cast<Weight>(g.max_degree()) + 1), 0);
        // An isolated vertex carries weight 0 from the start.
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (remaining_[v] == 0) {
                ++taken_[0];
            }
        }
    }

    bool run() {
        if (taken_[0] > 1) {
            return false;
        }
        return place(0);
    }

    [[nodiscard]] std::vector<Weight> weights() const { return w_; }

  private:
    bool place(EdgeId e) {
        if (e == g_.num_edges()) {
            return true;
        }
        const auto [u, v] = g_.edge(e);
        for (Weight x = 1; x <= k_; ++x) {
            if (++nodes_ > budget_) {
                throw ExactBudgetError("node budget of " + std::to_string(budget_) + " exhausted");
            }
            w_[e] = x;
            fv_[u] += x;
            fv_[v] += x;
            --remaining_[u];
            --remaining_[v];
            if (settle(u, v)) {
                if (place(e + 1)) {
                    return true;
                }
                unsettle(u, v);
            }
            ++remaining_[u];
            ++remaining_[v];
            fv_[u] -= x;
            fv_[v] -= x;
        }
        w_[e] = 0;
        return false;
    }

    // Marks completed endpoints; false (with nothing marked) on a collision
    // or when some open vertex can no longer avoid the taken weights.
    bool settle(Vertex u, Vertex v) {
        const bool cu = remaining_[u] == 0;
        const bool cv = remaining_[v] == 0;
        if (cu && taken_[fv_[u]]) {
            return false;
        }
        if (cv && (taken_[fv_[v]] || (cu && fv_[u] == fv_[v]))) {
            return false;
        }
        if (cu) {
            ++taken_[fv_[u]];
        }
        if (cv) {
            ++taken_[fv_[v]];
        }
        if (!open_vertices_feasible()) {
            unsettle(u, v);
            return false;
        }
        return true;
    }

    void unsettle(Vertex u, Vertex v) {
        if (remaining_[u] == 0) {
            --taken_[fv_[u]];
        }
        if (remaining_[v] == 0) {
            --taken_[fv_[v]];
        }
    }

    [[nodiscard]] bool open_vertices_feasible() const {
        for (Vertex x = 0; x < g_.num_vertices(); ++x) {
            if (remaining_[x] == 0) {
                continue;
            }
            const Weight lo = fv_[x] + remaining_[x];
            const Weight hi = fv_[x] + static_cast<Weight>(remaining_[x]) * k_;
            bool free = false;
            for (Weight y = lo; y <= hi && !free; ++y) {
                free = taken_[static_cast<std::size_t>(y)] == 0;
            }
            if (!free) {
                return false;
            }
        }
        return true;
    }

    const Graph& g_;
    Weight k_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::vector<Weight> fv_;
    std::vector<int> remaining_;
    std::vector<Weight> w_;
    std::vector<int> taken_;
};

} // namespace

std::optional<EdgeWeighting> irregular_weighting_within(const Graph& g, Weight k, std::uint64_t& nodes,
                                                        std::uint64_t node_budget) {
    if (k < 1) {
        return std::nullopt;
    }
    Search search(g, k, nodes, node_budget);
    if (!search.run()) {
        return std::nullopt;
    }
    return EdgeWeighting(g, search.weights());
}

ExactResult exact_strength(const Graph& g, Weight k_max, std::uint64_t node_budget) {
    ExactResult result;
    if (!finite_strength(g)) {
        return result;
    }
    for (Weight k = std::max<Weight>(degree_lower_bound(g), 1); k <= k_max; ++k) {
        if (auto w = irregular_weighting_within(g, k, result.nodes_explored, node_budget)) {
            result.s = k;
            result.witness = std::move(w);
            return result;
        }
    }
    throw ExactBudgetError("no irregular weighting with k <= " + std::to_string(k_max));
}

ExactResult exact_strength(const Graph& g) {
    return exact_strength(g, std::max<Weight>(static_cast<Weight>(g.num_vertices()), 2));
}

bool certify_optimal(const Graph& g, const EdgeWeighting& w, std::uint64_t node_budget) {
    if (!finite_strength(g)) {
        throw InfiniteStrengthError();
    }
    if (w.size() != g.num_edges() || !is_irregular(g, w)) {
        return false;
    }
    const auto k = std::max<Weight>(w.k(), 1);
    return exact_strength(g, k, node_budget).s == k;
}

} // namespace irreg
