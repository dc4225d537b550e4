#pragma once

// Immutable simple undirected graph on dense vertex indices 0..n-1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irreg {

using Vertex = std::uint32_t;
using EdgeId = std::size_t;

// Edges are identified by the unordered pair, stored as (min, max).
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Graph {
  public:
    Graph() = default;

    // Throws GraphError on self-loops, duplicates or out-of-range endpoints.
    Graph(std::size_t n, std::vector<Edge> edges);

    [[nodiscard]] std::size_t num_vertices() const { return n_; }
    [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }

    // Sorted lexicographically; EdgeId indexes into this.
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_[e]; }

    // Neighbors in ascending order; incident_edges(v)[k] joins v and neighbors(v)[k].
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::span<const EdgeId> incident_edges(Vertex v) const {
        return {inc_.data() + offsets_[v], inc_.data() + offsets_[v + 1]};
    }

    [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] std::size_t min_degree() const;
    [[nodiscard]] std::size_t max_degree() const;

    // Returns the common degree if every vertex has it, -1 otherwise (and for n = 0).
    [[nodiscard]] long regular_degree() const;

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    // Throws GraphError when {u, v} is not an edge.
    [[nodiscard]] EdgeId edge_id(Vertex u, Vertex v) const;

    [[nodiscard]] static Edge normalize(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adj_;
    std::vector<EdgeId> inc_;
};

// Connected components as vertex lists, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

} // namespace irreg
