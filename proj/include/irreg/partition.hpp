#pragma once

// Random vertex partition into d bins, the big set B (bins 1..d-s*) and the
// thirteen small groups S_1..S_13 covering the remaining s* bins.

#include <cstdint>
#include <random>
#include <vector>

#include "irreg/graph.hpp"
#include "irreg/params.hpp"

namespace irreg {

// Group index of a vertex: 0 for B, 1..13 for S_1..S_13.
using Group = std::uint8_t;
inline constexpr Group kBigGroup = 0;
inline constexpr int kSmallGroups = 13;

class VertexPartition {
  public:
    VertexPartition() = default;

    // Builds a partition from raw draws: x[v] is X_v scaled by 2^64, label[e]
    // is the corrected coin of edge e (ignored unless both ends are in B).
    // No scale guards are applied.
    static VertexPartition from_draws(const Graph& g, const ConstructionParams& p, std::vector<std::uint64_t> x,
                                      std::vector<std::uint8_t> label);

    [[nodiscard]] std::size_t num_vertices() const { return x_.size(); }
    [[nodiscard]] std::int64_t d() const { return d_; }
    [[nodiscard]] std::int64_t s_star() const { return s_star_; }

    [[nodiscard]] std::uint64_t x(Vertex v) const { return x_[v]; }
    [[nodiscard]] const std::vector<std::uint64_t>& draws() const { return x_; }
    // 1..d, equal to floor(x * d / 2^64) + 1.
    [[nodiscard]] std::int64_t bin(Vertex v) const { return bin_[v]; }
    [[nodiscard]] Group group(Vertex v) const { return group_[v]; }
    [[nodiscard]] bool in_big(Vertex v) const { return group_[v] == kBigGroup; }

    [[nodiscard]] bool label(EdgeId e) const { return label_[e] != 0; }
    [[nodiscard]] const std::vector<std::uint8_t>& labels() const { return label_; }
    // Corrected: labeled and both endpoints in B.
    [[nodiscard]] bool corrected(const Graph& g, EdgeId e) const {
        return label_[e] != 0 && in_big(g.edge(e).u) && in_big(g.edge(e).v);
    }
    [[nodiscard]] std::vector<EdgeId> corrected_edges(const Graph& g) const;

    // Bins of B that form the Step-1 window of a vertex in bin i:
    // d - s* - i + 1 < j <= d - s*.
    [[nodiscard]] bool in_window(std::int64_t j, std::int64_t i) const {
        return j > d_ - s_star_ - i + 1 && j <= d_ - s_star_;
    }

    // Vertices of B sorted by (x, index); position k-1 holds v_k.
    [[nodiscard]] std::vector<Vertex> b_order() const;
    // Vertices of S_i in ascending index order, i in 1..13.
    [[nodiscard]] std::vector<Vertex> small_set(int i) const;
    [[nodiscard]] std::vector<std::size_t> bin_sizes() const; // index 1..d

    void set_x(Vertex v, std::uint64_t x);
    void set_label(EdgeId e, bool on) { label_[e] = on ? 1 : 0; }

    [[nodiscard]] static std::int64_t bin_of(std::uint64_t x, std::int64_t d) {
        return static_cast<std::int64_t>((static_cast<unsigned __int128>(x) * static_cast<std::uint64_t>(d)) >> 64) + 1;
    }
    [[nodiscard]] static Group group_of(std::int64_t bin, std::int64_t d, std::int64_t s_star);

    friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

  private:
    std::int64_t d_ = 0;
    std::int64_t s_star_ = 0;
    std::vector<std::uint64_t> x_;
    std::vector<std::int64_t> bin_;
    std::vector<Group> group_;
    std::vector<std::uint8_t> label_;
};

// Bernoulli(alpha) coin from one 64-bit draw, exact in integer arithmetic.
inline bool label_coin(std::uint64_t r, const ConstructionParams& p) {
    return static_cast<unsigned __int128>(r) * static_cast<std::uint64_t>(p.d) <
           static_cast<unsigned __int128>(static_cast<std::uint64_t>(p.alpha_num)) << 64;
}

// Draws X_v for all v (in index order), then one label per edge (in EdgeId
// order). Throws StageError(partition) when d <= s*.
VertexPartition sample_partition(const Graph& g, const ConstructionParams& p, std::uint64_t seed);

} // namespace irreg
