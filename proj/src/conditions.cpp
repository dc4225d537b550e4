#include "irreg/conditions.hpp"

#include <algorithm>
#include <random>

#include "irreg/stage_error.hpp"

namespace irreg {
namespace {

constexpr std::size_t kStride = 14;

struct Event {
    Condition family;
    std::int64_t index;
    int sub = 0;
};

// Scans the families in order and returns the first violated instance.
std::optional<Event> first_violation(const ConstructionParams& p, const VertexPartition& vp,
                                     const ConditionCounts& c) {
    const auto n = c.n;
    const auto group_iv = condition_interval(p, Condition::vertex_group);
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 1; i <= kSmallGroups; ++i) {
            if (!group_iv.contains(c.deg(v, i))) {
                return Event{Condition::vertex_group, v, i};
            }
        }
    }
    const auto small_iv = condition_interval(p, Condition::vertex_small);
    for (Vertex v = 0; v < n; ++v) {
        if (!small_iv.contains(c.deg_small(v))) {
            return Event{Condition::vertex_small, v};
        }
    }
    for (auto fam : {Condition::vertex_window, Condition::vertex_corrected}) {
        for (Vertex v = 0; v < n; ++v) {
            if (!vp.in_big(v)) {
                continue;
            }
            const auto iv = condition_interval(p, fam, vp.bin(v));
            const auto value = fam == Condition::vertex_window ? c.window[v] : c.corrected_window[v];
            if (!iv.contains(value)) {
                return Event{fam, v};
            }
        }
    }
    for (std::int64_t i = 1; i <= p.d; ++i) {
        if (!condition_interval(p, Condition::bin_prefix, i).contains(static_cast<long double>(c.bin_prefix[i]))) {
            return Event{Condition::bin_prefix, i};
        }
    }
    const auto size_iv = condition_interval(p, Condition::group_size);
    for (int i = 1; i <= kSmallGroups; ++i) {
        if (!size_iv.contains(static_cast<long double>(c.group_size[i]))) {
            return Event{Condition::group_size, i};
        }
    }
    return std::nullopt;
}

// Keeps ConditionCounts in sync with a partition under single-variable updates.
class ConditionTracker {
  public:
    ConditionTracker(const Graph& g, const ConstructionParams& p, VertexPartition& vp)
        : g_{g}, vp_{vp}, counts_{count_conditions(g, p, vp)}, bin_size_(vp.bin_sizes()) {}

    [[nodiscard]] const ConditionCounts& counts() {
        std::int64_t acc = 0;
        for (std::size_t i = 1; i < bin_size_.size(); ++i) {
            acc += static_cast<std::int64_t>(bin_size_[i]);
            counts_.bin_prefix[i] = acc;
        }
        return counts_;
    }

    void redraw_x(Vertex u, std::uint64_t x) {
        const auto old_bin = vp_.bin(u);
        const auto old_group = vp_.group(u);
        vp_.set_x(u, x);
        const auto new_bin = vp_.bin(u);
        if (new_bin == old_bin) {
            return;
        }
        const auto new_group = vp_.group(u);
        --bin_size_[static_cast<std::size_t>(old_bin)];
        ++bin_size_[static_cast<std::size_t>(new_bin)];
        if (old_group != kBigGroup) {
            --counts_.group_size[old_group];
        }
        if (new_group != kBigGroup) {
            ++counts_.group_size[new_group];
        }
        const auto nb = g_.neighbors(u);
        const auto inc = g_.incident_edges(u);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const Vertex w = nb[k];
            --counts_.deg_group[std::size_t{w} * kStride + old_group];
            ++counts_.deg_group[std::size_t{w} * kStride + new_group];
            if (vp_.in_big(w)) {
                const int lab = vp_.label(inc[k]) ? 1 : 0;
                if (vp_.in_window(old_bin, vp_.bin(w))) {
                    --counts_.window[w];
                    counts_.corrected_window[w] -= lab;
                }
                if (vp_.in_window(new_bin, vp_.bin(w))) {
                    ++counts_.window[w];
                    counts_.corrected_window[w] += lab;
                }
            }
        }
        recount_window(u);
    }

    void redraw_label(EdgeId e, bool on) {
        if (vp_.label(e) == on) {
            return;
        }
        vp_.set_label(e, on);
        const int delta = on ? 1 : -1;
        const auto [a, b] = g_.edge(e);
        if (vp_.in_big(a) && vp_.in_window(vp_.bin(b), vp_.bin(a))) {
            counts_.corrected_window[a] += delta;
        }
        if (vp_.in_big(b) && vp_.in_window(vp_.bin(a), vp_.bin(b))) {
            counts_.corrected_window[b] += delta;
        }
    }

  private:
    void recount_window(Vertex v) {
        std::int32_t win = 0;
        std::int32_t cor = 0;
        if (vp_.in_big(v)) {
            const auto nb = g_.neighbors(v);
            const auto inc = g_.incident_edges(v);
            for (std::size_t k = 0; k < nb.size(); ++k) {
                if (vp_.in_window(vp_.bin(nb[k]), vp_.bin(v))) {
                    ++win;
                    cor += vp_.label(inc[k]) ? 1 : 0;
                }
            }
        }
        counts_.window[v] = win;
        counts_.corrected_window[v] = cor;
    }

    const Graph& g_;
    VertexPartition& vp_;
    ConditionCounts counts_;
    std::vector<std::size_t> bin_size_;
};

} // namespace

std::string_view condition_name(Condition c) {
    switch (c) {
    case Condition::vertex_group: return "vSi";
    case Condition::vertex_small: return "vS";
    case Condition::vertex_window: return "vB";
    case Condition::vertex_corrected: return "vB'";
    case Condition::bin_prefix: return "i";
    case Condition::group_size: return "Si";
    }
    return "?";
}

std::int32_t ConditionCounts::deg_small(Vertex v) const {
    std::int32_t s = 0;
    for (int g = 1; g <= kSmallGroups; ++g) {
        s += deg(v, g);
    }
    return s;
}

bool ConditionReport::passed() const {
    return std::all_of(status.begin(), status.end(), [](const ConditionStatus& s) { return s.passed; });
}

Interval condition_interval(const ConstructionParams& p, Condition c, std::int64_t index) {
    const long double D = p.local_slack();
    const long double G = p.global_slack();
    const long double s = static_cast<long double>(p.s_star);
    const long double ratio = static_cast<long double>(p.n) / static_cast<long double>(p.d);
    switch (c) {
    case Condition::vertex_group:
        return {s / 13.0L - D, s / 13.0L + D};
    case Condition::vertex_small:
        return {s - 13.0L * D, s + 13.0L * D};
    case Condition::vertex_window: {
        const auto center = static_cast<long double>(index - 1);
        return {center - D, center + D};
    }
    case Condition::vertex_corrected: {
        const long double a = static_cast<long double>(p.alpha_num) / static_cast<long double>(p.d);
        const auto center = static_cast<long double>(index - 1);
        return {a * center - a * D, a * center + a * D};
    }
    case Condition::bin_prefix: {
        const auto center = static_cast<long double>(index) * ratio;
        return {center - G, center + G};
    }
    case Condition::group_size: {
        const auto center = s * ratio / 13.0L;
        return {center - 2.0L * G, center + 2.0L * G};
    }
    }
    return {0, 0};
}

ConditionCounts count_conditions(const Graph& g, const ConstructionParams& p, const VertexPartition& vp) {
    const auto n = g.num_vertices();
    ConditionCounts c;
    c.n = n;
    c.deg_group.assign(n * kStride, 0);
    c.window.assign(n, 0);
    c.corrected_window.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        const auto inc = g.incident_edges(v);
        const bool big = vp.in_big(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const Vertex u = nb[k];
            ++c.deg_group[std::size_t{v} * kStride + vp.group(u)];
            if (big && vp.in_window(vp.bin(u), vp.bin(v))) {
                ++c.window[v];
                if (vp.label(inc[k])) {
                    ++c.corrected_window[v];
                }
            }
        }
        if (!big) {
            ++c.group_size[vp.group(v)];
        }
    }
    const auto sizes = vp.bin_sizes();
    c.bin_prefix.assign(static_cast<std::size_t>(p.d) + 1, 0);
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        c.bin_prefix[i] = c.bin_prefix[i - 1] + static_cast<std::int64_t>(sizes[i]);
    }
    return c;
}

ConditionReport evaluate_conditions(const ConstructionParams& p, const VertexPartition& vp, ConditionCounts counts) {
    ConditionReport r;
    r.counts = std::move(counts);
    const auto& c = r.counts;
    bool seen_any[kConditionCount] = {};

    auto observe = [&](Condition fam, const Interval& iv, long double value, std::int64_t index, int sub) {
        auto& st = r.status[static_cast<std::size_t>(fam)];
        const auto m = iv.margin(value);
        if (!seen_any[static_cast<std::size_t>(fam)] || m < st.margin) {
            st.margin = m;
            st.worst = index;
            st.worst_sub = sub;
            seen_any[static_cast<std::size_t>(fam)] = true;
        }
        if (!iv.contains(value)) {
            if (st.passed) {
                st.first = index;
                st.first_sub = sub;
            }
            st.passed = false;
            ++st.violations;
        }
    };

    const auto group_iv = condition_interval(p, Condition::vertex_group);
    const auto small_iv = condition_interval(p, Condition::vertex_small);
    for (Vertex v = 0; v < c.n; ++v) {
        for (int i = 1; i <= kSmallGroups; ++i) {
            observe(Condition::vertex_group, group_iv, c.deg(v, i), v, i);
        }
    }
    for (Vertex v = 0; v < c.n; ++v) {
        observe(Condition::vertex_small, small_iv, c.deg_small(v), v, 0);
    }
    for (Vertex v = 0; v < c.n; ++v) {
        if (vp.in_big(v)) {
            observe(Condition::vertex_window, condition_interval(p, Condition::vertex_window, vp.bin(v)), c.window[v],
                    v, 0);
        }
    }
    for (Vertex v = 0; v < c.n; ++v) {
        if (vp.in_big(v)) {
            observe(Condition::vertex_corrected, condition_interval(p, Condition::vertex_corrected, vp.bin(v)),
                    c.corrected_window[v], v, 0);
        }
    }
    for (std::int64_t i = 1; i <= p.d; ++i) {
        observe(Condition::bin_prefix, condition_interval(p, Condition::bin_prefix, i),
                static_cast<long double>(c.bin_prefix[static_cast<std::size_t>(i)]), i, 0);
    }
    const auto size_iv = condition_interval(p, Condition::group_size);
    for (int i = 1; i <= kSmallGroups; ++i) {
        observe(Condition::group_size, size_iv, static_cast<long double>(c.group_size[i]), i, 0);
    }
    return r;
}

ConditionReport check_conditions(const Graph& g, const ConstructionParams& p, const VertexPartition& vp) {
    return evaluate_conditions(p, vp, count_conditions(g, p, vp));
}

ResampleResult resample_until_valid(const Graph& g, const ConstructionParams& p, VertexPartition vp,
                                    std::size_t budget, std::uint64_t seed, ResamplePolicy policy) {
    if (p.d <= p.s_star) {
        throw StageError(Stage::partition, "partition degenerate at this scale (d = " + std::to_string(p.d) +
                                               " <= s* = " + std::to_string(p.s_star) + ")");
    }
    std::mt19937_64 rng(seed);
    ConditionTracker tracker(g, p, vp);
    std::size_t rounds = 0;

    auto redraw_closed_neighborhood = [&](Vertex v) {
        // Ascending index order over N(v) u {v}.
        const auto nb = g.neighbors(v);
        bool done_v = false;
        for (Vertex u : nb) {
            if (!done_v && v < u) {
                tracker.redraw_x(v, rng());
                done_v = true;
            }
            tracker.redraw_x(u, rng());
        }
        if (!done_v) {
            tracker.redraw_x(v, rng());
        }
    };
    auto redraw_labels_at = [&](Vertex v) {
        for (EdgeId e : g.incident_edges(v)) {
            tracker.redraw_label(e, label_coin(rng(), p));
        }
    };

    for (;;) {
        const auto event = first_violation(p, vp, tracker.counts());
        if (!event) {
            break;
        }
        if (rounds == budget) {
            throw StageError(Stage::partition,
                             "conditions unattainable at this scale: resample budget of " + std::to_string(budget) +
                                 " rounds exhausted (violated " + std::string(condition_name(event->family)) +
                                 " at " + std::to_string(event->index) + ")");
        }
        ++rounds;
        const auto v = static_cast<Vertex>(event->index);
        switch (event->family) {
        case Condition::vertex_group:
        case Condition::vertex_small:
            redraw_closed_neighborhood(v);
            break;
        case Condition::vertex_window:
            if (policy == ResamplePolicy::local_first) {
                tracker.redraw_x(v, rng());
            } else {
                redraw_closed_neighborhood(v);
            }
            break;
        case Condition::vertex_corrected:
            if (policy == ResamplePolicy::moser_tardos) {
                redraw_closed_neighborhood(v);
            }
            redraw_labels_at(v);
            break;
        case Condition::bin_prefix:
        case Condition::group_size:
            for (Vertex u = 0; u < g.num_vertices(); ++u) {
                tracker.redraw_x(u, rng());
            }
            break;
        }
    }

    if (rounds > 0 && !check_conditions(g, p, vp).passed()) {
        throw std::logic_error("incremental condition tracking diverged from a fresh count");
    }
    return {std::move(vp), rounds};
}

} // namespace irreg
