#include "irreg/pipeline.hpp"

#include <algorithm>
#include <chrono>

namespace irreg {
namespace {

constexpr std::uint64_t kResampleStream = 0x5851f42d4c957f2dULL;

class StageClock {
  public:
    explicit StageClock(SolveReport& r) : report_{r} {}

    template <typename F>
    auto run(Stage s, F&& body) {
        const auto start = std::chrono::steady_clock::now();
        struct Record {
            StageClock& clock;
            Stage stage;
            std::chrono::steady_clock::time_point start;
            ~Record() {
                const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
                clock.report_.timings_ms[std::string(stage_name(stage))] += ms.count();
            }
        } record{*this, s, start};
        return body();
    }

  private:
    SolveReport& report_;
};

void check_step2_post(const Graph& g, const ConstructionParams& p, const VertexPartition& vp,
                      std::span<const Weight> f12_vertex) {
    const auto order = vp.b_order();
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (f12_vertex[order[k]] != step2_target(p, k + 1)) {
            throw std::logic_error("step2 missed the target of a big vertex");
        }
    }
    (void)g;
}

} // namespace

Weight construction_weight_bound(const ConstructionParams& p) {
    return std::max(p.ceil_ratio() + 13 * p.omega + p.f2_cap, 1 + 3 * p.q);
}

void fill_bounds(SolveReport& report, const Graph& g, double epsilon, double gamma) {
    report.n = static_cast<std::int64_t>(g.num_vertices());
    report.safe_lower = degree_lower_bound(g);
    const auto d = g.regular_degree();
    report.d = d >= 0 ? std::optional<std::int64_t>(d) : std::nullopt;
    if (d >= 1 && d <= report.n - 1) {
        try {
            const auto b = bounds(report.n, d, epsilon - 2.0 * gamma);
            report.safe_lower = b.safe_lower;
            report.paper_lower = b.paper_lower;
            report.thm_general = b.thm_general;
            report.thm_dense = b.thm_dense;
            report.thm_dense_applicable = b.thm_dense_applicable;
        } catch (const std::invalid_argument&) {
            // beta outside (0, 1/4): no reference bounds
        }
    }
}

PipelineRun run_pipeline(const Graph& g, const PipelineConfig& config) {
    if (!finite_strength(g)) {
        throw InfiniteStrengthError();
    }
    PipelineRun run;
    auto& report = run.report;
    report.algorithm = "paper";
    report.seed = config.seed;
    fill_bounds(report, g, config.epsilon, config.gamma);
    StageClock clock(report);

    try {
        const auto p = clock.run(Stage::params, [&] {
            if (g.regular_degree() < 0) {
                throw StageError(Stage::params, "graph is not regular");
            }
            return derive_params(static_cast<std::int64_t>(g.num_vertices()), g.regular_degree(), config.epsilon,
                                 config.gamma);
        });
        run.params = p;
        report.params = ParamsEcho{p.epsilon, p.gamma, p.s_star, p.omega, p.alpha(), p.q};

        auto resampled = clock.run(Stage::partition, [&] {
            auto vp = sample_partition(g, p, config.seed);
            return resample_until_valid(g, p, std::move(vp), config.budget, config.seed ^ kResampleStream,
                                        config.policy);
        });
        report.resamples = resampled.rounds;
        run.partition = std::move(resampled.partition);
        const auto& vp = *run.partition;

        run.layers.f1 = clock.run(Stage::step1, [&] {
            auto f1 = step1_initial(g, p, vp);
            if (config.check_invariants && check_step1_ranges(g, p, vp, f1)) {
                throw std::logic_error("step1 weight outside its class range");
            }
            return f1;
        });

        run.layers.f2 = clock.run(Stage::step2, [&] {
            auto f2 = step2_level_big(g, p, vp, run.layers.f1);
            if (config.check_invariants) {
                std::vector<Weight> f12 = run.layers.f1;
                for (EdgeId e = 0; e < f12.size(); ++e) {
                    f12[e] += f2[e];
                }
                if (check_step2_ranges(g, p, vp, f12)) {
                    throw std::logic_error("step2 weight outside its class range");
                }
                check_step2_post(g, p, vp, vertex_weights(g, f12));
            }
            return f2;
        });
        const auto f12 = run.layers.f12();

        run.buffer = clock.run(Stage::buffer, [&] {
            auto buf = measure_buffer(g, p, vp, vertex_weights(g, f12));
            if (!buf.positive()) {
                throw StageError(Stage::buffer, "small vertices do not sit above big ones (separation " +
                                                    std::to_string(buf.separation) + ")");
            }
            return buf;
        });

        clock.run(Stage::step3, [&] {
            run.order = build_small_order(g, vp);
            run.step3 = step3_distinguish_small(g, p, vp, f12, *run.order, Step3Options{config.check_invariants});
            return 0;
        });
        run.layers.f3 = run.step3->f3;

        run.weighting = clock.run(Stage::verify, [&] {
            auto total = run.layers.total();
            const auto check = is_irregular(g, total);
            if (!check) {
                throw StageError(Stage::verify,
                                 "vertex weights collide at " + std::to_string(check.collision->first) + " and " +
                                     std::to_string(check.collision->second) + " (weight " +
                                     std::to_string(check.collision_weight) + ")",
                                 check.collision->first);
            }
            EdgeWeighting w(g, std::move(total));
            if (w.k() > construction_weight_bound(p)) {
                throw std::logic_error("weight above the construction bound");
            }
            return w;
        });
        report.valid = true;
        report.achieved_k = run.weighting->k();
    } catch (const StageError& err) {
        run.failed_stage = err.stage();
        run.failure = err.what();
        report.stage_failure = std::string(stage_name(err.stage()));
    }
    return run;
}

} // namespace irreg
