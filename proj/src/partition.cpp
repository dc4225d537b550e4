#include "irreg/partition.hpp"

#include <algorithm>

#include "irreg/stage_error.hpp"

namespace irreg {

Group VertexPartition::group_of(std::int64_t bin, std::int64_t d, std::int64_t s_star) {
    const auto first_small = d - s_star;
    if (bin <= first_small) {
        return kBigGroup;
    }
    const auto width = s_star / kSmallGroups;
    return static_cast<Group>((bin - first_small + width - 1) / width);
}

VertexPartition VertexPartition::from_draws(const Graph& g, const ConstructionParams& p, std::vector<std::uint64_t> x,
                                            std::vector<std::uint8_t> label) {
    if (x.size() != g.num_vertices() || label.size() != g.num_edges()) {
        throw std::invalid_argument("partition draws do not match the graph");
    }
    if (p.s_star <= 0 || p.s_star % kSmallGroups != 0) {
        throw std::invalid_argument("s* must be a positive multiple of 13");
    }
    VertexPartition vp;
    vp.d_ = p.d;
    vp.s_star_ = p.s_star;
    vp.x_ = std::move(x);
    vp.label_ = std::move(label);
    vp.bin_.resize(vp.x_.size());
    vp.group_.resize(vp.x_.size());
    for (Vertex v = 0; v < vp.x_.size(); ++v) {
        vp.set_x(v, vp.x_[v]);
    }
    return vp;
}

void VertexPartition::set_x(Vertex v, std::uint64_t x) {
    x_[v] = x;
    bin_[v] = bin_of(x, d_);
    group_[v] = group_of(bin_[v], d_, s_star_);
}

std::vector<EdgeId> VertexPartition::corrected_edges(const Graph& g) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (corrected(g, e)) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<Vertex> VertexPartition::b_order() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < x_.size(); ++v) {
        if (in_big(v)) {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return x_[a] != x_[b] ? x_[a] < x_[b] : a < b; });
    return out;
}

std::vector<Vertex> VertexPartition::small_set(int i) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < x_.size(); ++v) {
        if (group_[v] == i) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<std::size_t> VertexPartition::bin_sizes() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(d_) + 1, 0);
    for (auto b : bin_) {
        ++out[static_cast<std::size_t>(b)];
    }
    return out;
}

VertexPartition sample_partition(const Graph& g, const ConstructionParams& p, std::uint64_t seed) {
    if (p.d <= p.s_star) {
        throw StageError(Stage::partition, "partition degenerate at this scale (d = " + std::to_string(p.d) +
                                               " <= s* = " + std::to_string(p.s_star) + ")");
    }
    if (g.regular_degree() != p.d || static_cast<std::int64_t>(g.num_vertices()) != p.n) {
        throw std::invalid_argument("graph does not match the construction parameters");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> x(g.num_vertices());
    for (auto& xv : x) {
        xv = rng();
    }
    std::vector<std::uint8_t> label(g.num_edges());
    for (auto& l : label) {
        l = label_coin(rng(), p) ? 1 : 0;
    }
    return VertexPartition::from_draws(g, p, std::move(x), std::move(label));
}

} // namespace irreg
