#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "irreg/graph.hpp"

namespace irreg {

using Weight = std::int64_t;

class WeightingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InfiniteStrengthError : public std::runtime_error {
  public:
    InfiniteStrengthError() : std::runtime_error("graph has infinite irregularity strength") {}
};

// Positive integer weight per edge, indexed by EdgeId of the owning graph.
class EdgeWeighting {
  public:
    EdgeWeighting() = default;
    // Throws WeightingError unless weights.size() == g.num_edges() and all weights >= 1.
    EdgeWeighting(const Graph& g, std::vector<Weight> weights);

    [[nodiscard]] Weight operator[](EdgeId e) const { return w_[e]; }
    [[nodiscard]] Weight at(const Graph& g, Vertex u, Vertex v) const { return w_[g.edge_id(u, v)]; }
    [[nodiscard]] std::span<const Weight> values() const { return w_; }
    [[nodiscard]] std::size_t size() const { return w_.size(); }
    // Largest weight; 0 for an edgeless graph.
    [[nodiscard]] Weight k() const { return k_; }

    friend bool operator==(const EdgeWeighting&, const EdgeWeighting&) = default;

  private:
    std::vector<Weight> w_;
    Weight k_ = 0;
};

// The three construction layers and their edge-wise sum.
struct WeightingLayers {
    std::vector<Weight> f1;
    std::vector<Weight> f2;
    std::vector<Weight> f3;

    [[nodiscard]] std::vector<Weight> f12() const;
    [[nodiscard]] std::vector<Weight> total() const;
};

// f^V(v) = sum of the weights on edges at v. Throws WeightingError when the
// weight vector does not cover every edge.
std::vector<Weight> vertex_weights(const Graph& g, std::span<const Weight> w);
inline std::vector<Weight> vertex_weights(const Graph& g, const EdgeWeighting& w) {
    return vertex_weights(g, w.values());
}

struct IrregularityCheck {
    bool irregular = true;
    // Smallest colliding weight, reported as (u, v) with u < v.
    std::optional<std::pair<Vertex, Vertex>> collision;
    Weight collision_weight = 0;

    explicit operator bool() const { return irregular; }
};

IrregularityCheck is_irregular(const Graph& g, std::span<const Weight> w);
inline IrregularityCheck is_irregular(const Graph& g, const EdgeWeighting& w) { return is_irregular(g, w.values()); }

// No component is a single edge and at most one vertex is isolated.
bool finite_strength(const Graph& g);

// Counting bound valid for any graph: vertices of degree in [delta, i] carry
// weights in [delta, i*k], so k >= (N_i + delta - 1) / i for every i.
// Isolated vertices are ignored. Equals ceil((n+d-1)/d) on d-regular graphs.
Weight degree_lower_bound(const Graph& g);

} // namespace irreg
