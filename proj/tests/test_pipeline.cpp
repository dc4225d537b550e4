#include <doctest.h>

#include "irreg/pipeline.hpp"
#include "support.hpp"

using namespace irreg;

TEST_CASE("successful run satisfies every construction invariant") {
    const auto g = random_regular(2000, 666, 3);
    PipelineConfig config;
    config.seed = 3;
    const auto run = run_pipeline(g, config);
    REQUIRE(run.ok());
    const auto& p = *run.params;
    const auto& vp = *run.partition;
    const auto& w = *run.weighting;

    CHECK(run.report.valid);
    CHECK(run.report.achieved_k == w.k());
    CHECK(is_irregular(g, w));
    CHECK(w.k() >= run.report.safe_lower);
    CHECK(w.k() <= construction_weight_bound(p));
    CHECK_FALSE(check_step1_ranges(g, p, vp, run.layers.f1));
    CHECK_FALSE(check_step2_ranges(g, p, vp, run.layers.f12()));

    const auto f12v = vertex_weights(g, run.layers.f12());
    const auto order = vp.b_order();
    for (std::size_t k = 0; k < order.size(); ++k) {
        CHECK(f12v[order[k]] == step2_target(p, k + 1));
    }
    const auto fv = vertex_weights(g, w);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!vp.in_big(v)) {
            REQUIRE(run.step3->ap[v]);
            CHECK(run.step3->ap[v]->contains(fv[v]));
        }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto f3 = run.layers.f3[e];
        CHECK(f3 >= 0);
        CHECK(f3 <= 3 * p.q);
        if (edge_class(g, vp, e) != EdgeClass::small_internal) {
            CHECK(f3 == 0);
        }
        CHECK(w[e] == run.layers.f1[e] + run.layers.f2[e] + f3);
    }
    CHECK(run.report.params->s_star == p.s_star);
    CHECK(run.report.timings_ms.count("step3") == 1);
}

TEST_CASE("guard failures are typed and emit no weighting") {
    const auto g = random_regular(1200, 300, 1);
    PipelineConfig config;
    const auto run = run_pipeline(g, config);
    CHECK_FALSE(run.ok());
    REQUIRE(run.failed_stage);
    CHECK(run.report.stage_failure == std::string(stage_name(*run.failed_stage)));
    CHECK_FALSE(run.report.valid);
    CHECK_FALSE(run.report.achieved_k);

    const auto tiny = run_pipeline(random_regular(60, 8, 1));
    CHECK(tiny.failed_stage == Stage::partition);

    const auto irregular = run_pipeline(testing::path(5));
    CHECK(irregular.failed_stage == Stage::params);

    CHECK_THROWS_AS(run_pipeline(testing::complete(2)), InfiniteStrengthError);

    PipelineConfig none;
    none.budget = 0;
    const auto starved = run_pipeline(g, none);
    CHECK(starved.failed_stage == Stage::partition);
    CHECK(starved.failure.find("unattainable") != std::string::npos);
}

TEST_CASE("runs are reproducible") {
    const auto g = random_regular(1200, 400, 2);
    PipelineConfig config;
    config.seed = 2;
    const auto a = run_pipeline(g, config);
    const auto b = run_pipeline(g, config);
    CHECK(a.failed_stage == b.failed_stage);
    CHECK(a.failure == b.failure);
    CHECK(a.layers.f1 == b.layers.f1);
    CHECK(a.layers.f2 == b.layers.f2);
    CHECK(a.report.resamples == b.report.resamples);
}
