#include "irreg/construction.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <unordered_set>

#include "irreg/stage_error.hpp"

namespace irreg {
namespace {

Weight floor_mod(Weight a, Weight m) {
    const Weight r = a % m;
    return r < 0 ? r + m : r;
}

std::optional<RangeViolation> check_ranges(const Graph& g, const ConstructionParams& p, const VertexPartition& vp,
                                           std::span<const Weight> f, Weight cross_hi) {
    if (f.size() != g.num_edges()) {
        throw std::invalid_argument("layer does not cover every edge");
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto cls = edge_class(g, vp, e);
        Weight lo = 1;
        Weight hi = 1;
        switch (cls) {
        case EdgeClass::big_internal:
            hi = p.floor_ratio() + 2;
            break;
        case EdgeClass::cross:
            lo = p.ceil_ratio();
            hi = cross_hi;
            break;
        case EdgeClass::small_internal:
            break;
        }
        if (f[e] < lo || f[e] > hi) {
            return RangeViolation{e, cls, f[e], lo, hi};
        }
    }
    return std::nullopt;
}

} // namespace

EdgeClass edge_class(const Graph& g, const VertexPartition& vp, EdgeId e) {
    const auto [u, v] = g.edge(e);
    const bool bu = vp.in_big(u);
    const bool bv = vp.in_big(v);
    if (bu && bv) {
        return EdgeClass::big_internal;
    }
    return bu || bv ? EdgeClass::cross : EdgeClass::small_internal;
}

std::vector<Weight> step1_initial(const Graph& g, const ConstructionParams& p, const VertexPartition& vp) {
    const Weight fl = p.floor_ratio();
    const Weight plain = p.upper_fraction() ? fl + 1 : fl + 2;
    const Weight corrected = p.upper_fraction() ? fl + 2 : fl + 1;
    std::vector<Weight> f1(g.num_edges(), 1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.edge(e);
        const bool bu = vp.in_big(u);
        const bool bv = vp.in_big(v);
        if (bu && bv) {
            if (vp.in_window(vp.bin(u), vp.bin(v)) || vp.in_window(vp.bin(v), vp.bin(u))) {
                f1[e] = vp.label(e) ? corrected : plain;
            }
        } else if (bu || bv) {
            const Group i = bu ? vp.group(v) : vp.group(u);
            f1[e] = static_cast<Weight>(i) * p.omega + p.ceil_ratio();
        }
    }
    return f1;
}

std::optional<RangeViolation> check_step1_ranges(const Graph& g, const ConstructionParams& p,
                                                 const VertexPartition& vp, std::span<const Weight> f1) {
    return check_ranges(g, p, vp, f1, p.ceil_ratio() + 13 * p.omega);
}

std::optional<RangeViolation> check_step2_ranges(const Graph& g, const ConstructionParams& p,
                                                 const VertexPartition& vp, std::span<const Weight> f12) {
    return check_ranges(g, p, vp, f12, p.ceil_ratio() + 13 * p.omega + p.f2_cap);
}

std::vector<Weight> step2_level_big(const Graph& g, const ConstructionParams& p, const VertexPartition& vp,
                                    std::span<const Weight> f1) {
    const auto fv = vertex_weights(g, f1);
    std::vector<Weight> f2(g.num_edges(), 0);
    const auto order = vp.b_order();
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Vertex v = order[k];
        const Weight surplus = step2_target(p, k + 1) - fv[v];
        if (surplus < 0) {
            throw StageError(Stage::step2, "target below current weight, scale too small", v);
        }
        std::vector<EdgeId> cross;
        const auto nb = g.neighbors(v);
        const auto inc = g.incident_edges(v);
        for (std::size_t j = 0; j < nb.size(); ++j) {
            if (!vp.in_big(nb[j])) {
                cross.push_back(inc[j]);
            }
        }
        if (cross.empty()) {
            throw StageError(Stage::step2, "big vertex has no small neighbor", v);
        }
        const auto deg = static_cast<Weight>(cross.size());
        const Weight base = surplus / deg;
        const Weight extra = surplus % deg;
        if (base + (extra > 0 ? 1 : 0) > p.f2_cap) {
            throw StageError(Stage::step2, "cap exceeded (" + std::to_string(base + (extra > 0 ? 1 : 0)) + " > " +
                                               std::to_string(p.f2_cap) + ")",
                             v);
        }
        for (std::size_t j = 0; j < cross.size(); ++j) {
            f2[cross[j]] = base + (static_cast<Weight>(j) < extra ? 1 : 0);
        }
    }
    return f2;
}

BufferReport measure_buffer(const Graph& g, const ConstructionParams& p, const VertexPartition& vp,
                            std::span<const Weight> f12_vertex) {
    constexpr Weight kNone = std::numeric_limits<Weight>::max();
    std::array<Weight, 14> lo;
    std::array<Weight, 14> hi;
    lo.fill(kNone);
    hi.fill(std::numeric_limits<Weight>::min());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const Group t = vp.group(v);
        lo[t] = std::min(lo[t], f12_vertex[v]);
        hi[t] = std::max(hi[t], f12_vertex[v]);
    }
    BufferReport r;
    r.max_big = lo[0] == kNone ? 0 : hi[0];
    Weight min_small = kNone;
    for (int t = 1; t <= kSmallGroups; ++t) {
        min_small = std::min(min_small, lo[t]);
    }
    r.min_small = min_small == kNone ? r.max_big + 1 : min_small;
    r.separation = r.min_small - r.max_big;

    const long double need = 0.4L * static_cast<long double>(p.omega) * static_cast<long double>(p.d);
    long double margin = std::numeric_limits<long double>::infinity();
    for (int t = 1; t <= kSmallGroups; ++t) {
        if (lo[t] == kNone || lo[t - 1] == kNone) {
            continue;
        }
        margin = std::min(margin, static_cast<long double>(lo[t] - hi[t - 1]) - need);
    }
    r.group_margin = margin;
    return r;
}

Weight least_loaded_residue(std::span<const std::int64_t> counts) {
    return static_cast<Weight>(std::min_element(counts.begin(), counts.end()) - counts.begin());
}

SOrdering build_small_order(const Graph& g, const VertexPartition& vp) {
    const auto n = g.num_vertices();
    SOrdering out;
    out.position.assign(n, -1);

    std::vector<Vertex> low;
    for (Vertex v = 0; v < n; ++v) {
        if (!vp.in_big(v) && vp.group(v) < kSmallGroups) {
            low.push_back(v);
        }
    }
    std::sort(low.begin(), low.end(), [&](Vertex a, Vertex b) { return vp.x(a) != vp.x(b) ? vp.x(a) < vp.x(b) : a < b; });
    out.order = low;

    std::vector<std::uint8_t> seen(n, 0);
    for (Vertex root = 0; root < n; ++root) {
        if (vp.group(root) != kSmallGroups || seen[root]) {
            continue;
        }
        std::vector<Vertex> bfs{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < bfs.size(); ++head) {
            for (Vertex w : g.neighbors(bfs[head])) {
                if (vp.group(w) == kSmallGroups && !seen[w]) {
                    seen[w] = 1;
                    bfs.push_back(w);
                }
            }
        }
        if (bfs.size() < 2) {
            throw StageError(Stage::step3, "isolated vertex in S_13", root);
        }
        std::reverse(bfs.begin(), bfs.end());
        out.r.push_back(bfs[bfs.size() - 2]);
        out.t.push_back(bfs.back());
        out.order.insert(out.order.end(), bfs.begin(), bfs.end());
        out.components.push_back(std::move(bfs));
    }
    for (std::size_t i = 0; i < out.order.size(); ++i) {
        out.position[out.order[i]] = static_cast<long>(i);
    }
    return out;
}

namespace {

class Scheduler {
  public:
    Scheduler(const Graph& g, const ConstructionParams& p, const VertexPartition& vp, std::span<const Weight> f12,
              const SOrdering& order, const Step3Options& options)
        : g_{g}, vp_{vp}, order_{order}, options_{options}, q_{p.q} {
        fv_ = vertex_weights(g, f12);
        f3_.assign(g.num_edges(), 0);
        ap_.assign(g.num_vertices(), std::nullopt);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (edge_class(g, vp, e) == EdgeClass::small_internal) {
                add(e, q_);
            }
        }
        for (int t = 1; t <= kSmallGroups; ++t) {
            size_[t] = static_cast<std::int64_t>(vp.small_set(t).size());
            residue_count_[t].assign(static_cast<std::size_t>(q_), 0);
        }
    }

    Step3Result run() {
        std::vector<std::uint8_t> is_r(g_.num_vertices(), 0);
        std::vector<std::uint8_t> is_t(g_.num_vertices(), 0);
        for (std::size_t j = 0; j < order_.r.size(); ++j) {
            is_r[order_.r[j]] = 1;
            is_t[order_.t[j]] = 1;
        }
        for (std::size_t i = 0; i < order_.order.size(); ++i) {
            const Vertex v = order_.order[i];
            if (is_t[v]) {
                continue; // settled together with its r
            }
            if (is_r[v]) {
                settle_pair(v, order_.order.at(i + 1));
            } else {
                settle_vertex(v);
            }
            if (options_.check_invariants) {
                check_processed();
            }
        }
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (!vp_.in_big(v) && !ap_[v]) {
                throw std::logic_error("step3 left a vertex of S unprocessed");
            }
        }
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            if (f3_[e] < 0 || f3_[e] > 3 * q_) {
                throw std::logic_error("step3 weight outside [0, 3q]");
            }
        }
        return Step3Result{std::move(f3_), std::move(ap_)};
    }

  private:
    struct Shift {
        std::vector<EdgeId> minus;  // backward edges whose far end sits at its larger member
        std::vector<EdgeId> plus;   // backward edges whose far end sits at its smaller member
        std::vector<EdgeId> extra;  // forward edges beyond e_i
    };

    void add(EdgeId e, Weight delta) {
        const auto [u, v] = g_.edge(e);
        f3_[e] += delta;
        fv_[u] += delta;
        fv_[v] += delta;
    }

    long pos(Vertex v) const { return order_.position[v]; }

    void guard_degree(Vertex v, int t) const {
        std::int64_t deg_s = 0;
        for (Vertex w : g_.neighbors(v)) {
            deg_s += vp_.in_big(w) ? 0 : 1;
        }
        if (q_ * deg_s < 4 * size_[t] + 2 * q_) {
            throw StageError(Stage::step3,
                             "infeasible at this scale: deg_S = " + std::to_string(deg_s) + " < 4|S_" +
                                 std::to_string(t) + "|/q + 2 = " + std::to_string(4 * size_[t]) + "/" +
                                 std::to_string(q_) + " + 2",
                             v);
        }
    }

    // Classifies the S-edges of v other than `skip`; an edge counts as
    // backward when its far end has already been processed.
    Shift shift_edges(Vertex v, std::optional<Vertex> skip, std::optional<EdgeId> forward_used) const {
        Shift s;
        const auto nb = g_.neighbors(v);
        const auto inc = g_.incident_edges(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const Vertex w = nb[k];
            if (vp_.in_big(w) || (skip && *skip == w)) {
                continue;
            }
            if (ap_[w]) {
                if (fv_[w] == ap_[w]->low()) {
                    s.plus.push_back(inc[k]);
                } else {
                    s.minus.push_back(inc[k]);
                }
            } else if (!forward_used || inc[k] != *forward_used) {
                s.extra.push_back(inc[k]);
            }
        }
        return s;
    }

    // Moves f^V(v) by m*q for the smallest unblocked reachable value and
    // records AP_v.
    void settle(Vertex v, int t, const Shift& s) {
        const auto lo = -static_cast<Weight>(s.minus.size());
        const auto hi = static_cast<Weight>(s.plus.size() + s.extra.size());
        const auto& blocked = blocked_[t];
        std::optional<Weight> chosen;
        for (Weight m = lo; m <= hi; ++m) {
            const Weight value = fv_[v] + m * q_;
            if (value >= 0 && !blocked.contains(value)) {
                chosen = m;
                break;
            }
        }
        if (!chosen) {
            throw StageError(Stage::step3, "infeasible at this scale: no unblocked value reachable", v);
        }
        Weight m = *chosen;
        for (std::size_t k = 0; m < 0; ++k, ++m) {
            add(s.minus[k], -q_);
        }
        for (std::size_t k = 0; m > 0 && k < s.plus.size(); ++k, --m) {
            add(s.plus[k], q_);
        }
        for (std::size_t k = 0; m > 0; ++k, --m) {
            add(s.extra[k], q_);
        }
        record(v, t);
    }

    void record(Vertex v, int t) {
        const auto cls = APClass::containing(fv_[v], q_);
        ap_[v] = cls;
        ++residue_count_[t][static_cast<std::size_t>(cls.residue)];
        blocked_[t].insert(cls.low());
        blocked_[t].insert(cls.high());
    }

    std::optional<EdgeId> first_forward(Vertex v) const {
        const auto nb = g_.neighbors(v);
        const auto inc = g_.incident_edges(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (!vp_.in_big(nb[k]) && pos(nb[k]) > pos(v)) {
                return inc[k];
            }
        }
        return std::nullopt;
    }

    void settle_vertex(Vertex v) {
        const int t = vp_.group(v);
        const auto e = first_forward(v);
        if (!e) {
            throw StageError(Stage::step3, "vertex has no forward edge", v);
        }
        guard_degree(v, t);
        const auto a = least_loaded_residue(residue_count_[t]);
        add(*e, floor_mod(a - fv_[v], q_));
        settle(v, t, shift_edges(v, std::nullopt, e));
    }

    void settle_pair(Vertex r, Vertex t_vertex) {
        const int t = kSmallGroups;
        if (!g_.has_edge(r, t_vertex)) {
            throw std::logic_error("terminal pair is not an edge");
        }
        guard_degree(r, t);
        guard_degree(t_vertex, t);
        const auto& counts = residue_count_[t];
        Weight best = 0;
        std::int64_t best_load = std::numeric_limits<std::int64_t>::max();
        for (Weight delta = 0; delta < q_; ++delta) {
            const auto load = counts[static_cast<std::size_t>(floor_mod(fv_[r] + delta, q_))] +
                              counts[static_cast<std::size_t>(floor_mod(fv_[t_vertex] + delta, q_))];
            if (load < best_load) {
                best_load = load;
                best = delta;
            }
        }
        const EdgeId rt = g_.edge_id(r, t_vertex);
        add(rt, best);
        const auto sr = shift_edges(r, t_vertex, std::nullopt);
        if (!sr.extra.empty()) {
            throw std::logic_error("r has a forward edge besides {r, t}");
        }
        settle(r, t, sr);
        const auto st = shift_edges(t_vertex, r, std::nullopt);
        if (!st.extra.empty()) {
            throw std::logic_error("t has a forward edge");
        }
        settle(t_vertex, t, st);
    }

    void check_processed() const {
        for (Vertex u = 0; u < g_.num_vertices(); ++u) {
            if (ap_[u] && !ap_[u]->contains(fv_[u])) {
                throw std::logic_error("step3 moved a processed vertex out of its class");
            }
        }
    }

    const Graph& g_;
    const VertexPartition& vp_;
    const SOrdering& order_;
    Step3Options options_;
    Weight q_;
    std::vector<Weight> fv_;
    std::vector<Weight> f3_;
    std::vector<std::optional<APClass>> ap_;
    std::array<std::int64_t, 14> size_{};
    std::array<std::vector<std::int64_t>, 14> residue_count_;
    std::array<std::unordered_set<Weight>, 14> blocked_;
};

} // namespace

Step3Result step3_distinguish_small(const Graph& g, const ConstructionParams& p, const VertexPartition& vp,
                                    std::span<const Weight> f12, const SOrdering& order,
                                    const Step3Options& options) {
    if (f12.size() != g.num_edges()) {
        throw std::invalid_argument("layer does not cover every edge");
    }
    return Scheduler(g, p, vp, f12, order, options).run();
}

} // namespace irreg
