#include "irreg/graph.hpp"

#include <algorithm>
#include <numeric>

namespace irreg {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_{n}, edges_{std::move(edges)} {
    for (auto& e : edges_) {
        if (e.u == e.v) {
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u >= n_ || e.v >= n_) {
            throw GraphError("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             "} references a vertex >= n = " + std::to_string(n_));
        }
        e = normalize(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw GraphError("duplicate edge {" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + "}");
    }

    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) {
        offsets_[v + 1] = offsets_[v] + deg[v];
    }
    adj_.resize(2 * edges_.size());
    inc_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v), so each neighbor list comes out ascending:
    // entries for v arrive first from edges {w, v} with w < v (ascending w),
    // then from edges {v, w} with w > v (ascending w).
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto [u, v] = edges_[id];
        adj_[fill[v]] = u;
        inc_[fill[v]++] = id;
    }
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto [u, v] = edges_[id];
        adj_[fill[u]] = v;
        inc_[fill[u]++] = id;
    }
}

std::size_t Graph::min_degree() const {
    std::size_t best = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v) {
        best = std::min(best, degree(v));
    }
    return best;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

long Graph::regular_degree() const {
    if (n_ == 0) {
        return -1;
    }
    return min_degree() == max_degree() ? static_cast<long>(degree(0)) : -1;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) {
        return false;
    }
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
    if (u < n_ && v < n_) {
        auto nb = neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it != nb.end() && *it == v) {
            return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
        }
    }
    throw GraphError("no edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace irreg
