#include "irreg/weighting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace irreg {

EdgeWeighting::EdgeWeighting(const Graph& g, std::vector<Weight> weights) : w_{std::move(weights)} {
    if (w_.size() != g.num_edges()) {
        throw WeightingError("weighting covers " + std::to_string(w_.size()) + " of " +
                             std::to_string(g.num_edges()) + " edges");
    }
    for (EdgeId e = 0; e < w_.size(); ++e) {
        if (w_[e] < 1) {
            const auto [u, v] = g.edge(e);
            throw WeightingError("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} has weight " +
                                 std::to_string(w_[e]) + " < 1");
        }
        k_ = std::max(k_, w_[e]);
    }
}

std::vector<Weight> WeightingLayers::f12() const {
    std::vector<Weight> out(f1.size());
    for (std::size_t e = 0; e < out.size(); ++e) {
        out[e] = f1[e] + f2[e];
    }
    return out;
}

std::vector<Weight> WeightingLayers::total() const {
    std::vector<Weight> out(f1.size());
    for (std::size_t e = 0; e < out.size(); ++e) {
        out[e] = f1[e] + f2[e] + f3[e];
    }
    return out;
}

std::vector<Weight> vertex_weights(const Graph& g, std::span<const Weight> w) {
    if (w.size() != g.num_edges()) {
        throw WeightingError("missing edge weight: " + std::to_string(w.size()) + " weights for " +
                             std::to_string(g.num_edges()) + " edges");
    }
    std::vector<Weight> out(g.num_vertices(), 0);
    for (EdgeId e = 0; e < w.size(); ++e) {
        const auto [u, v] = g.edge(e);
        out[u] += w[e];
        out[v] += w[e];
    }
    return out;
}

IrregularityCheck is_irregular(const Graph& g, std::span<const Weight> w) {
    const auto fv = vertex_weights(g, w);
    std::vector<Vertex> order(fv.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return fv[a] != fv[b] ? fv[a] < fv[b] : a < b; });
    IrregularityCheck out;
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (fv[order[i - 1]] == fv[order[i]]) {
            out.irregular = false;
            out.collision = std::pair{order[i - 1], order[i]};
            out.collision_weight = fv[order[i]];
            break;
        }
    }
    return out;
}

bool finite_strength(const Graph& g) {
    std::size_t isolated = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 0) {
            ++isolated;
        } else if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 1) {
            return false;
        }
    }
    return isolated <= 1;
}

Weight degree_lower_bound(const Graph& g) {
    std::size_t max_deg = g.max_degree();
    if (max_deg == 0) {
        return 1;
    }
    std::vector<std::size_t> count(max_deg + 1, 0);
    std::size_t min_deg = max_deg;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto dv = g.degree(v);
        if (dv > 0) {
            ++count[dv];
            min_deg = std::min(min_deg, dv);
        }
    }
    Weight best = 1;
    std::size_t cumulative = 0;
    for (std::size_t i = min_deg; i <= max_deg; ++i) {
        cumulative += count[i];
        const auto need = static_cast<Weight>(cumulative + min_deg - 1);
        const auto den = static_cast<Weight>(i);
        best = std::max(best, (need + den - 1) / den);
    }
    return best;
}

} // namespace irreg
