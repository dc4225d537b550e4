#include "irreg/generators.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace irreg {
namespace {

constexpr std::uint64_t pair_key(Vertex a, Vertex b) {
    return a < b ? (std::uint64_t{a} << 32) | b : (std::uint64_t{b} << 32) | a;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets) {
    if (offsets.empty()) {
        throw GraphError("circulant needs at least one connection offset");
    }
    std::vector<Edge> edges;
    auto sorted = offsets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw GraphError("circulant offsets must be distinct");
    }
    for (auto s : sorted) {
        if (s == 0 || 2 * s > n) {
            throw GraphError("circulant offset " + std::to_string(s) + " outside [1, n/2]");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const auto j = (i + s) % n;
            // offset n/2 pairs each vertex with its antipode exactly once
            if (2 * s == n && j < i) {
                continue;
            }
            edges.push_back(Graph::normalize(static_cast<Vertex>(i), static_cast<Vertex>(j)));
        }
    }
    return Graph(n, std::move(edges));
}

Graph hypercube(std::size_t dim) {
    if (dim == 0 || dim > 24) {
        throw GraphError("hypercube dimension must be in [1, 24]");
    }
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t b = 0; b < dim; ++b) {
            const auto w = v ^ (std::size_t{1} << b);
            if (v < w) {
                edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(w)});
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back(Graph::normalize(i, (i + 1) % 5));
        edges.push_back({i, i + 5});
        edges.push_back(Graph::normalize(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, std::move(edges));
}

} // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::random_regular: return "random-regular";
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::circulant: return "circulant";
    case Family::hypercube: return "hypercube";
    case Family::petersen: return "petersen";
    }
    return "?";
}

Family parse_family(std::string_view tag) {
    for (auto f : {Family::random_regular, Family::complete, Family::cycle, Family::circulant, Family::hypercube,
                   Family::petersen}) {
        if (family_name(f) == tag) {
            return f;
        }
    }
    throw GraphError("unknown graph family '" + std::string(tag) + "'");
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if ((n * d) % 2 != 0) {
        throw GraphError("random-regular needs n*d even (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }
    if (d >= n) {
        throw GraphError("random-regular needs d < n");
    }
    if (n > 0xFFFFFFFFull) {
        throw GraphError("too many vertices");
    }
    if (d == 0) {
        return Graph(n, {});
    }

    const std::size_t m = n * d / 2;
    const std::size_t max_failures = 100 * n * d;
    std::mt19937_64 rng(seed);

    std::vector<Vertex> stubs(n * d);
    std::vector<std::pair<Vertex, Vertex>> pairs(m);
    std::unordered_map<std::uint64_t, std::uint32_t> mult;
    mult.reserve(2 * m);

    for (;;) {
        for (std::size_t i = 0; i < stubs.size(); ++i) {
            stubs[i] = static_cast<Vertex>(i / d);
        }
        std::shuffle(stubs.begin(), stubs.end(), rng);
        mult.clear();
        for (std::size_t i = 0; i < m; ++i) {
            pairs[i] = {stubs[2 * i], stubs[2 * i + 1]};
            ++mult[pair_key(pairs[i].first, pairs[i].second)];
        }
        auto count = [&](std::uint64_t key) -> std::uint32_t {
            auto it = mult.find(key);
            return it == mult.end() ? 0 : it->second;
        };
        auto drop = [&](std::uint64_t key) {
            if (auto it = mult.find(key); --it->second == 0) {
                mult.erase(it);
            }
        };
        auto is_bad = [&](std::size_t i) {
            const auto [a, b] = pairs[i];
            return a == b || count(pair_key(a, b)) > 1;
        };
        std::vector<std::size_t> work;
        for (std::size_t i = 0; i < m; ++i) {
            if (is_bad(i)) {
                work.push_back(i);
            }
        }

        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        std::size_t failures = 0;
        while (!work.empty() && failures <= max_failures) {
            const auto i = work.back();
            if (!is_bad(i)) {
                work.pop_back();
                continue;
            }
            const auto j = pick(rng);
            if (j == i) {
                ++failures;
                continue;
            }
            auto [a, b] = pairs[i];
            auto [c, e] = pairs[j];
            if (rng() & 1) {
                std::swap(c, e);
            }
            // (a,b),(c,e) -> (a,c),(b,e)
            const bool simple = a != c && b != e && pair_key(a, c) != pair_key(b, e);
            const auto old_i = pair_key(a, b);
            const auto old_j = pair_key(pairs[j].first, pairs[j].second);
            drop(old_i);
            drop(old_j);
            if (!simple || count(pair_key(a, c)) != 0 || count(pair_key(b, e)) != 0) {
                ++mult[old_i];
                ++mult[old_j];
                ++failures;
                continue;
            }
            pairs[i] = {a, c};
            pairs[j] = {b, e};
            ++mult[pair_key(a, c)];
            ++mult[pair_key(b, e)];
            work.pop_back();
        }
        if (!work.empty()) {
            continue;
        }

        std::vector<Edge> edges;
        edges.reserve(m);
        for (const auto& [a, b] : pairs) {
            edges.push_back(Graph::normalize(a, b));
        }
        return Graph(n, std::move(edges));
    }
}

Graph generate(const GraphFamilySpec& spec) {
    switch (spec.family) {
    case Family::random_regular:
        return random_regular(spec.n, spec.d, spec.seed);
    case Family::complete:
        if (spec.n == 0) {
            throw GraphError("complete graph needs n >= 1");
        }
        return complete_graph(spec.n);
    case Family::cycle:
        if (spec.n < 3) {
            throw GraphError("cycle needs n >= 3");
        }
        return circulant(spec.n, {1});
    case Family::circulant:
        return circulant(spec.n, spec.connections);
    case Family::hypercube:
        if (spec.n != 0 && spec.n != (std::size_t{1} << spec.d)) {
            throw GraphError("hypercube of dimension d has 2^d vertices");
        }
        return hypercube(spec.d);
    case Family::petersen:
        return petersen();
    }
    throw GraphError("unknown family");
}

} // namespace irreg
