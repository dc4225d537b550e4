#include "irreg/fallback.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace irreg {
namespace {

class LocalSearch {
  public:
    LocalSearch(const Graph& g, std::mt19937_64& rng) : g_{g}, rng_{rng} {}

    void reset(Weight k, bool randomize) {
        k_ = k;
        const auto cap = static_cast<std::size_t>(k * static_cast<Weight>(g_.max_degree()) + 1);
        count_.assign(cap, 0);
        bucket_.assign(cap, {});
        hot_.clear();
        hot_pos_.assign(cap, kAbsent);
        cost_ = 0;
        std::uniform_int_distribution<Weight> pick(1, k);
        w_.assign(g_.num_edges(), (k + 1) / 2);
        if (randomize) {
            for (auto& x : w_) {
                x = pick(rng_);
            }
        }
        fv_ = vertex_weights(g_, w_);
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            insert(v);
        }
    }

    [[nodiscard]] std::int64_t cost() const { return cost_; }
    [[nodiscard]] const std::vector<Weight>& weights() const { return w_; }

    // One move; true when the collision count dropped.
    bool step(double equal_probability) {
        const Weight value = hot_[std::uniform_int_distribution<std::size_t>(0, hot_.size() - 1)(rng_)];
        const auto& members = bucket_[static_cast<std::size_t>(value)];
        const Vertex v = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng_)];
        const auto inc = g_.incident_edges(v);
        const auto nb = g_.neighbors(v);
        const auto j = std::uniform_int_distribution<std::size_t>(0, inc.size() - 1)(rng_);
        const EdgeId e = inc[j];
        const Vertex u = nb[j];

        std::int64_t best = 0;
        Weight best_weight = 0;
        for (Weight x = 1; x <= k_; ++x) {
            if (x == w_[e]) {
                continue;
            }
            const auto delta = move_delta(v, u, x - w_[e]);
            if (best_weight == 0 || delta < best) {
                best = delta;
                best_weight = x;
            }
        }
        if (best_weight == 0 || best > 0) {
            return false;
        }
        if (best == 0 && std::uniform_real_distribution<double>(0.0, 1.0)(rng_) >= equal_probability) {
            return false;
        }
        apply(e, v, u, best_weight);
        return best < 0;
    }

  private:
    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

    std::int64_t move_delta(Vertex v, Vertex u, Weight delta) {
        const auto a = static_cast<std::size_t>(fv_[v]);
        const auto b = static_cast<std::size_t>(fv_[u]);
        const auto a2 = static_cast<std::size_t>(fv_[v] + delta);
        const auto b2 = static_cast<std::size_t>(fv_[u] + delta);
        std::int64_t change = 0;
        change -= --count_[a];
        change -= --count_[b];
        change += count_[a2]++;
        change += count_[b2]++;
        --count_[a2];
        --count_[b2];
        ++count_[a];
        ++count_[b];
        return change;
    }

    void apply(EdgeId e, Vertex v, Vertex u, Weight x) {
        const Weight delta = x - w_[e];
        erase(v);
        erase(u);
        w_[e] = x;
        fv_[v] += delta;
        fv_[u] += delta;
        insert(v);
        insert(u);
    }

    void insert(Vertex v) {
        const auto x = static_cast<std::size_t>(fv_[v]);
        cost_ += count_[x]++;
        bucket_[x].push_back(v);
        if (count_[x] == 2) {
            hot_pos_[x] = hot_.size();
            hot_.push_back(fv_[v]);
        }
    }

    void erase(Vertex v) {
        const auto x = static_cast<std::size_t>(fv_[v]);
        cost_ -= --count_[x];
        auto& b = bucket_[x];
        *std::find(b.begin(), b.end(), v) = b.back();
        b.pop_back();
        if (count_[x] == 1) {
            const auto pos = hot_pos_[x];
            hot_[pos] = hot_.back();
            hot_pos_[static_cast<std::size_t>(hot_[pos])] = pos;
            hot_.pop_back();
            hot_pos_[x] = kAbsent;
        }
    }

    const Graph& g_;
    std::mt19937_64& rng_;
    Weight k_ = 1;
    std::vector<Weight> w_;
    std::vector<Weight> fv_;
    std::vector<std::int64_t> count_;
    std::vector<std::vector<Vertex>> bucket_;
    std::vector<Weight> hot_; // values held by two or more vertices
    std::vector<std::size_t> hot_pos_;
    std::int64_t cost_ = 0;
};

} // namespace

EdgeWeighting fallback_greedy(const Graph& g, std::uint64_t seed, Weight k_start, const FallbackConfig& config) {
    if (!finite_strength(g)) {
        throw InfiniteStrengthError();
    }
    if (g.num_edges() == 0) {
        return EdgeWeighting(g, {});
    }
    std::mt19937_64 rng(seed);
    LocalSearch search(g, rng);
    const auto patience = std::max<std::size_t>(config.stagnation_factor * g.num_edges(), 1);
    for (Weight k = std::max({k_start, degree_lower_bound(g), Weight{1}});; ++k) {
        for (std::size_t restart = 0; restart < std::max<std::size_t>(config.restarts_per_k, 1); ++restart) {
            search.reset(k, restart > 0);
            std::size_t idle = 0;
            while (search.cost() > 0 && idle < patience) {
                idle = search.step(config.equal_move_probability) ? 0 : idle + 1;
            }
            if (search.cost() == 0) {
                return EdgeWeighting(g, search.weights());
            }
            if (k == 1) {
                break;
            }
        }
    }
}

} // namespace irreg
