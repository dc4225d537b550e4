#pragma once

// Shared fixtures: small named graphs, seeded random inputs, the tiny suite of
// connected graphs, and a brute-force recount of the partition conditions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "irreg/conditions.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph.hpp"

namespace testing {

using irreg::Edge;
using irreg::Graph;
using irreg::Vertex;

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) {
        e.push_back({i, i + 1});
    }
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) { return irreg::generate({irreg::Family::cycle, n, 0, {}, 0}); }
inline Graph complete(std::size_t n) { return irreg::generate({irreg::Family::complete, n, 0, {}, 0}); }
inline Graph petersen() { return irreg::generate({irreg::Family::petersen, 0, 0, {}, 0}); }

// Edge weights in cyclic order (0,1), (1,2), ..., (n-1,0) mapped to EdgeIds.
inline std::vector<std::int64_t> cyclic_weights(const Graph& g, const std::vector<std::int64_t>& w) {
    std::vector<std::int64_t> out(g.num_edges(), 0);
    const auto n = static_cast<Vertex>(g.num_vertices());
    for (Vertex i = 0; i < n; ++i) {
        out[g.edge_id(i, (i + 1) % n)] = w[i];
    }
    return out;
}

// Erdos-Renyi style graph with edge probability p, deterministic in seed.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                e.push_back({u, v});
            }
        }
    }
    return Graph(n, e);
}

inline bool connected(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    std::size_t parts = n;
    for (auto [a, b] : edges) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --parts;
        }
    }
    return parts == 1;
}

// All connected graphs on 2..max_n vertices, one per isomorphism class
// (canonical form: the smallest relabeled adjacency bitmask).
inline std::vector<Graph> connected_graphs_up_to(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
        for (int u = 0; u < static_cast<int>(n); ++u) {
            for (int v = u + 1; v < static_cast<int>(n); ++v) {
                slot_of[u][v] = slot_of[v][u] = static_cast<int>(slots.size());
                slots.push_back({u, v});
            }
        }
        std::vector<std::vector<int>> perms;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<std::uint32_t> seen;
        const std::uint32_t total = 1u << slots.size();
        for (std::uint32_t mask = 1; mask < total; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (mask >> s & 1u) {
                    edges.push_back(slots[s]);
                }
            }
            if (edges.size() + 1 < n || !connected(n, edges)) {
                continue;
            }
            std::uint32_t canon = mask;
            for (const auto& p : perms) {
                std::uint32_t m = 0;
                for (auto [a, b] : edges) {
                    m |= 1u << slot_of[p[a]][p[b]];
                }
                canon = std::min(canon, m);
            }
            if (canon != mask) {
                continue;
            }
            std::vector<Edge> ge;
            for (auto [a, b] : edges) {
                ge.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
            }
            out.emplace_back(n, ge);
        }
    }
    return out;
}

// Recount of every quantity behind the six conditions straight from the edge
// list and the raw draws, with bins found by comparing x*d against multiples
// of 2^64.
inline irreg::ConditionCounts recount(const Graph& g, const irreg::ConstructionParams& p,
                                      const irreg::VertexPartition& vp) {
    using u128 = unsigned __int128;
    const auto n = g.num_vertices();
    const auto d = p.d;
    const auto s = p.s_star;
    std::vector<std::int64_t> bin(n);
    std::vector<int> group(n);
    for (Vertex v = 0; v < n; ++v) {
        const u128 scaled = static_cast<u128>(vp.x(v)) * static_cast<std::uint64_t>(d);
        std::int64_t b = 1;
        while (b < d && scaled >= (static_cast<u128>(b) << 64)) {
            ++b;
        }
        bin[v] = b;
        group[v] = 0;
        for (int i = 1; i <= 13; ++i) {
            // S_i covers bins in (d - (14-i) s/13, d - (13-i) s/13].
            if (13 * b > 13 * d - (14 - i) * s && 13 * b <= 13 * d - (13 - i) * s) {
                group[v] = i;
            }
        }
    }
    irreg::ConditionCounts c;
    c.n = n;
    c.deg_group.assign(n * 14, 0);
    c.window.assign(n, 0);
    c.corrected_window.assign(n, 0);
    c.bin_prefix.assign(static_cast<std::size_t>(d) + 1, 0);
    auto in_window = [&](std::int64_t j, std::int64_t i) { return d - s - i + 1 < j && j <= d - s; };
    for (irreg::EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.edge(e);
        ++c.deg_group[a * 14 + group[b]];
        ++c.deg_group[b * 14 + group[a]];
        for (auto [v, u] : {std::pair{a, b}, std::pair{b, a}}) {
            if (group[v] == 0 && in_window(bin[u], bin[v])) {
                ++c.window[v];
                c.corrected_window[v] += vp.labels()[e] != 0 ? 1 : 0;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        for (std::int64_t i = bin[v]; i <= d; ++i) {
            ++c.bin_prefix[static_cast<std::size_t>(i)];
        }
        if (group[v] != 0) {
            ++c.group_size[static_cast<std::size_t>(group[v])];
        }
    }
    return c;
}

} // namespace testing
