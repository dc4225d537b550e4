// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "irreg/cli.hpp"
#include "irreg/conditions.hpp"
#include "irreg/construction.hpp"
#include "irreg/exact.hpp"
#include "irreg/fallback.hpp"
#include "irreg/generators.hpp"
#include "irreg/params.hpp"
#include "irreg/partition.hpp"
#include "irreg/pipeline.hpp"
#include "../support.hpp"

using namespace irreg;
namespace fs = std::filesystem;

namespace {

// Collects the first few problems of a criterion; an empty list means pass.
class Problems {
  public:
    void add(const std::string& what) {
        if (list_.size() < 5) {
            list_.push_back(what);
        }
        ++count_;
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            add(what);
        }
    }
    [[nodiscard]] bool empty() const { return count_ == 0; }
    [[nodiscard]] std::string summary() const {
        std::string s = std::to_string(count_) + " problem(s)";
        for (const auto& p : list_) {
            s += "; " + p;
        }
        return s;
    }

  private:
    std::vector<std::string> list_;
    std::size_t count_ = 0;
};

struct Outcome {
    Problems problems;
    std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << " s";
    return out.str();
}

std::string graph_name(const Graph& g) {
    return "graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Vertex weights straight from the edge list, without the library helper.
std::vector<Weight> sums(const Graph& g, std::span<const Weight> w) {
    std::vector<Weight> out(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        out[g.edge(e).u] += w[e];
        out[g.edge(e).v] += w[e];
    }
    return out;
}

bool pairwise_distinct(const Graph& g, std::span<const Weight> w) {
    auto s = sums(g, w);
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// ---- exact oracle ----------------------------------------------------------

// All rotations and reflections of a cyclic sequence.
std::set<std::vector<Weight>> dihedral(std::vector<Weight> w) {
    std::set<std::vector<Weight>> out;
    for (int flip = 0; flip < 2; ++flip) {
        for (std::size_t r = 0; r < w.size(); ++r) {
            out.insert(w);
            std::rotate(w.begin(), w.begin() + 1, w.end());
        }
        std::reverse(w.begin(), w.end());
    }
    return out;
}

Outcome exact_ground_truth() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    struct Case {
        std::string name;
        Graph g;
        Weight expected;
    };
    const std::vector<Case> cases = {
        {"K_3", testing::complete(3), 3},
        {"K_4", testing::complete(4), 3},
        {"C_4", testing::cycle(4), 3},
        {"P_3", testing::path(3), 2},
    };
    for (const auto& c : cases) {
        const auto r = exact_strength(c.g);
        if (!r.s || !r.witness) {
            o.problems.add(c.name + ": no finite strength reported");
            continue;
        }
        o.problems.expect(*r.s == c.expected,
                          c.name + ": s = " + std::to_string(*r.s) + ", expected " + std::to_string(c.expected));
        o.problems.expect(r.witness->k() == *r.s, c.name + ": witness uses a larger weight than s");
        o.problems.expect(pairwise_distinct(c.g, r.witness->values()), c.name + ": witness is not irregular");
        std::uint64_t nodes = 0;
        o.problems.expect(!irregular_weighting_within(c.g, *r.s - 1, nodes),
                          c.name + ": an irregular weighting exists with k = s - 1");
        o.problems.expect(certify_optimal(c.g, *r.witness), c.name + ": certify_optimal rejects the witness");
        if (c.name == "C_4") {
            std::vector<Weight> cyc;
            for (Vertex i = 0; i < 4; ++i) {
                cyc.push_back(r.witness->at(c.g, i, (i + 1) % 4));
            }
            o.problems.expect(dihedral({1, 1, 2, 3}).count(cyc) == 1, "C_4: witness is not (1,1,2,3) cyclically");
        }
    }
    const auto elapsed = seconds_since(start);
    o.problems.expect(elapsed < 10.0, "runtime " + fmt_seconds(elapsed) + " exceeds 10 s");
    o.note = "K_3=3 K_4=3 C_4=3 P_3=2 certified, " + fmt_seconds(elapsed);
    return o;
}

// ---- lower bound -----------------------------------------------------------

Outcome lower_bound_consistency() {
    Outcome o;
    auto suite = testing::connected_graphs_up_to(6);
    suite.push_back(testing::petersen());
    std::size_t regular = 0;
    std::size_t infinite = 0;
    std::size_t skipped = 0;
    for (const auto& g : suite) {
        ExactResult r;
        try {
            r = exact_strength(g);
        } catch (const ExactBudgetError&) {
            ++skipped;
            continue;
        }
        if (!r.s) {
            ++infinite;
            continue;
        }
        const auto d = g.regular_degree();
        if (d > 0) {
            ++regular;
            const auto n = static_cast<std::int64_t>(g.num_vertices());
            const auto lower = ceil_div(n + d - 1, d);
            o.problems.expect(*r.s >= lower, graph_name(g) + ": exact s = " + std::to_string(*r.s) +
                                                 " below ceil((n+d-1)/d) = " + std::to_string(lower));
        }
    }
    const auto c4 = exact_strength(testing::cycle(4));
    const auto stated = ceil_div(4 + 2 + 1, 2);
    o.problems.expect(c4.s == 3 && stated == 4, "C_4 does not show s = 3 < ceil((n+d+1)/d) = 4");
    o.note = std::to_string(suite.size()) + " graphs, " + std::to_string(regular) + " regular, " +
             std::to_string(infinite) + " infinite, " + std::to_string(skipped) + " over budget; C_4: s=3 < " +
             std::to_string(stated);
    return o;
}

// ---- partition counts ------------------------------------------------------

Outcome partition_count_oracle() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto g = random_regular(2000, 500, 1);
    const auto p = derive_params(2000, 500, 0.1, 0.04);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto vp = sample_partition(g, p, seed);
        const auto lib = check_conditions(g, p, vp).counts;
        const auto ref = testing::recount(g, p, vp);
        const auto tag = "seed " + std::to_string(seed) + ": ";
        o.problems.expect(lib.deg_group == ref.deg_group, tag + "deg_{S_i}(v) differs");
        o.problems.expect(lib.window == ref.window, tag + "window counts differ");
        o.problems.expect(lib.corrected_window == ref.corrected_window, tag + "corrected counts differ");
        o.problems.expect(lib.bin_prefix == ref.bin_prefix, tag + "bin prefixes differ");
        o.problems.expect(lib.group_size == ref.group_size, tag + "|S_i| differ");
        o.problems.expect(lib == ref, tag + "counts differ");
    }
    o.note = "20 seeds on (2000, 500), " + fmt_seconds(seconds_since(start));
    return o;
}

// ---- pipeline grid ---------------------------------------------------------

struct GridRun {
    std::int64_t n;
    std::int64_t d;
    std::uint64_t seed;
    Graph g;
    PipelineRun run;
    bool crashed = false;
    std::string crash;
};

std::vector<GridRun> run_grid(double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<GridRun> out;
    for (std::int64_t n : {1200, 2000, 4000}) {
        for (std::int64_t d : {n / 4, n / 3}) {
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                GridRun r{n, d, seed, random_regular(static_cast<std::size_t>(n), static_cast<std::size_t>(d), seed),
                          {}, false, {}};
                PipelineConfig config;
                config.seed = seed;
                // The library's own invariant checks are off so that nothing is
                // filtered before the independent checks below.
                config.check_invariants = false;
                try {
                    r.run = run_pipeline(r.g, config);
                } catch (const std::exception& e) {
                    r.crashed = true;
                    r.crash = e.what();
                }
                out.push_back(std::move(r));
            }
        }
    }
    seconds = seconds_since(start);
    return out;
}

std::string run_name(const GridRun& r) {
    return "(n=" + std::to_string(r.n) + ", d=" + std::to_string(r.d) + ", seed=" + std::to_string(r.seed) + ")";
}

Outcome pipeline_validity(const std::vector<GridRun>& grid, double seconds) {
    Outcome o;
    std::size_t ok = 0;
    std::map<std::string, std::size_t> failures;
    for (const auto& r : grid) {
        const auto name = run_name(r);
        if (r.crashed) {
            o.problems.add(name + ": untyped failure: " + r.crash);
            continue;
        }
        const auto& run = r.run;
        if (!run.ok()) {
            ++failures[run.report.stage_failure.value_or("?")];
            o.problems.expect(run.failed_stage.has_value(), name + ": failed without a stage");
            o.problems.expect(run.failed_stage && run.report.stage_failure == std::string(stage_name(*run.failed_stage)),
                              name + ": report stage does not match the error");
            o.problems.expect(!run.report.valid && !run.report.achieved_k, name + ": failed run reports a weighting");
            continue;
        }
        ++ok;
        const auto& g = r.g;
        const auto& p = *run.params;
        const auto& vp = *run.partition;
        const auto& w = *run.weighting;
        o.problems.expect(!run.failed_stage && run.report.valid, name + ": success carries a failure");
        o.problems.expect(is_irregular(g, w) && pairwise_distinct(g, w.values()), name + ": weighting not irregular");

        // B-weights after Step 2 form one run of consecutive integers.
        const auto f12 = run.layers.f12();
        const auto f12v = sums(g, f12);
        std::vector<Weight> big;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (vp.in_big(v)) {
                big.push_back(f12v[v]);
            }
        }
        std::sort(big.begin(), big.end());
        bool consecutive = !big.empty();
        for (std::size_t i = 1; i < big.size(); ++i) {
            consecutive = consecutive && big[i] == big[i - 1] + 1;
        }
        o.problems.expect(consecutive, name + ": B-weights after Step 2 are not a consecutive segment");

        const auto fv = sums(g, w.values());
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (vp.in_big(v)) {
                continue;
            }
            const auto& ap = run.step3->ap[v];
            if (!ap) {
                o.problems.add(name + ": S-vertex " + std::to_string(v) + " has no AP class");
                continue;
            }
            const auto low = 2 * ap->lambda * p.q + ap->residue;
            o.problems.expect(ap->q == p.q && ap->residue >= 0 && ap->residue < p.q &&
                                  (fv[v] == low || fv[v] == low + p.q),
                              name + ": S-vertex " + std::to_string(v) + " outside its AP class");
        }
        Weight max_w = 0;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const auto [a, b] = g.edge(e);
            const bool small_edge = !vp.in_big(a) && !vp.in_big(b);
            const auto f3 = run.layers.f3[e];
            o.problems.expect(small_edge ? (f3 >= 0 && f3 <= 3 * p.q) : f3 == 0,
                              name + ": f3 out of range on edge " + std::to_string(e));
            o.problems.expect(w[e] == run.layers.f1[e] + run.layers.f2[e] + f3 && w[e] >= 1,
                              name + ": weighting is not f1 + f2 + f3");
            max_w = std::max(max_w, w[e]);
        }
        o.problems.expect(run.report.achieved_k == max_w && w.k() == max_w, name + ": achieved k is not max f(e)");
    }
    o.problems.expect(seconds < 300.0, "grid took " + fmt_seconds(seconds));
    std::string fails;
    for (const auto& [stage, count] : failures) {
        fails += " " + stage + "=" + std::to_string(count);
    }
    o.note = std::to_string(ok) + "/" + std::to_string(grid.size()) + " runs constructed, typed failures:" +
             (fails.empty() ? " none" : fails) + ", " + fmt_seconds(seconds);
    return o;
}

Outcome claim_ranges(const std::vector<GridRun>& grid) {
    Outcome o;
    std::size_t step1 = 0;
    std::size_t step2 = 0;
    for (const auto& r : grid) {
        if (r.crashed || !r.run.partition) {
            continue;
        }
        const auto& g = r.g;
        const auto& p = *r.run.params;
        const auto& vp = *r.run.partition;
        const auto floor_nd = p.n / p.d;
        const auto ceil_nd = ceil_div(p.n, p.d);
        auto check = [&](std::span<const Weight> w, Weight cross_hi, const std::string& step) {
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                const auto [a, b] = g.edge(e);
                const int big = (vp.in_big(a) ? 1 : 0) + (vp.in_big(b) ? 1 : 0);
                Weight lo = 1;
                Weight hi = 1;
                if (big == 2) {
                    hi = floor_nd + 2;
                } else if (big == 1) {
                    lo = ceil_nd;
                    hi = cross_hi;
                }
                o.problems.expect(w[e] >= lo && w[e] <= hi, run_name(r) + " " + step + ": edge " + std::to_string(e) +
                                                                " weight " + std::to_string(w[e]) + " outside [" +
                                                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
            }
        };
        if (!r.run.layers.f1.empty()) {
            ++step1;
            check(r.run.layers.f1, ceil_nd + 13 * p.omega, "step1");
        }
        if (!r.run.layers.f2.empty()) {
            ++step2;
            check(r.run.layers.f12(), ceil_nd + 13 * p.omega + p.f2_cap, "step2");
        }
    }
    o.problems.expect(step1 > 0 && step2 > 0, "no Step 1 / Step 2 output to check");
    o.note = std::to_string(step1) + " Step 1 and " + std::to_string(step2) + " Step 2 outputs checked per edge";
    return o;
}

// ---- fallback --------------------------------------------------------------

Outcome fallback_totality() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    auto suite = testing::connected_graphs_up_to(6);
    suite.push_back(testing::petersen());
    for (std::size_t n = 5; n <= 12; ++n) {
        suite.push_back(testing::cycle(n));
    }
    for (std::size_t n = 5; n <= 10; ++n) {
        suite.push_back(testing::complete(n));
    }
    suite.push_back(generate({Family::hypercube, 0, 3, {}, 0}));
    suite.push_back(generate({Family::hypercube, 0, 4, {}, 0}));
    suite.push_back(generate({Family::circulant, 12, 0, {1, 3}, 0}));
    suite.push_back(generate({Family::circulant, 15, 0, {1, 2, 5}, 0}));
    suite.push_back(testing::random_graph(9, 0.5, 2));
    suite.push_back(testing::random_graph(14, 0.3, 5));
    for (auto [n, d] : {std::pair{20, 4}, {30, 6}, {40, 3}, {60, 8}, {100, 10}}) {
        suite.push_back(random_regular(static_cast<std::size_t>(n), static_cast<std::size_t>(d), 7));
    }
    std::size_t total = 0;
    std::size_t regular = 0;
    for (const auto& g : suite) {
        if (!finite_strength(g)) {
            continue;
        }
        ++total;
        EdgeWeighting w;
        try {
            w = fallback_greedy(g, 1);
        } catch (const std::exception& e) {
            o.problems.add(graph_name(g) + ": " + e.what());
            continue;
        }
        o.problems.expect(w.size() == g.num_edges() && pairwise_distinct(g, w.values()),
                          graph_name(g) + ": fallback output fails verification");
        const auto d = g.regular_degree();
        if (d > 0) {
            ++regular;
            const auto cap = 6 * ceil_div(static_cast<std::int64_t>(g.num_vertices()), d);
            o.problems.expect(w.k() <= cap, graph_name(g) + ": k = " + std::to_string(w.k()) + " above 6 ceil(n/d) = " +
                                                std::to_string(cap));
        }
    }
    o.note = std::to_string(total) + " finite-strength graphs (" + std::to_string(regular) + " regular), " +
             fmt_seconds(seconds_since(start));
    return o;
}

// ---- determinism -----------------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    return cli::run(args, out, err);
}

Outcome determinism() {
    Outcome o;
    const auto dir = fs::temp_directory_path() / ("irreg_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto path = [&](const std::string& f) { return (dir / f).string(); };

    o.problems.expect(invoke({"gen", "--family", "random-regular", "--n", "2000", "--d", "666", "--seed", "3", "--out",
                              path("big.el")}) == 0,
                      "gen (2000, 666) failed");
    o.problems.expect(invoke({"gen", "--family", "random-regular", "--n", "60", "--d", "8", "--seed", "5", "--out",
                              path("small.el")}) == 0,
                      "gen (60, 8) failed");
    o.problems.expect(invoke({"gen", "--family", "random-regular", "--n", "60", "--d", "8", "--seed", "5", "--out",
                              path("small2.el")}) == 0 &&
                          slurp(path("small.el")) == slurp(path("small2.el")),
                      "gen output differs between runs");

    struct Job {
        std::string graph;
        std::string algo;
        std::string seed;
    };
    const std::vector<Job> jobs = {{"big", "paper", "3"}, {"small", "auto", "4"}, {"small", "fallback", "9"}};
    std::size_t compared = 0;
    for (const auto& j : jobs) {
        std::string outputs[2][2];
        for (int rep = 0; rep < 2; ++rep) {
            const auto stem = j.graph + "_" + j.algo + "_" + std::to_string(rep);
            const int code = invoke({"solve", "--in", path(j.graph + ".el"), "--algo", j.algo, "--seed", j.seed,
                                     "--no-timings", "--report", path(stem + ".json"), "--weights-out",
                                     path(stem + ".w")});
            o.problems.expect(code == 0, j.graph + "/" + j.algo + ": solve exited " + std::to_string(code));
            outputs[rep][0] = slurp(path(stem + ".json"));
            outputs[rep][1] = slurp(path(stem + ".w"));
        }
        o.problems.expect(!outputs[0][1].empty() && outputs[0][1] == outputs[1][1],
                          j.graph + "/" + j.algo + ": weighting files differ");
        o.problems.expect(!outputs[0][0].empty() && outputs[0][0] == outputs[1][0],
                          j.graph + "/" + j.algo + ": reports differ");
        ++compared;
    }

    std::string csv[2];
    for (int rep = 0; rep < 2; ++rep) {
        const auto out = path("bench_" + std::to_string(rep) + ".csv");
        o.problems.expect(invoke({"bench", "--grid", "n=1200;d=n/4;seeds=1,2", "--jobs", "2", "--no-timings", "--out",
                                  out}) == 0,
                          "bench exited non-zero");
        csv[rep] = slurp(out);
    }
    o.problems.expect(!csv[0].empty() && csv[0] == csv[1], "bench tables differ");

    std::error_code ec;
    fs::remove_all(dir, ec);
    o.note = std::to_string(compared) + " solve configurations and one bench table, byte-identical";
    return o;
}

} // namespace

int main() {
    int failed = 0;
    auto report = [&](const std::string& name, const std::function<Outcome()>& criterion) {
        Outcome o;
        try {
            o = criterion();
        } catch (const std::exception& e) {
            o.problems.add(std::string("exception: ") + e.what());
        }
        const bool pass = o.problems.empty();
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << (pass ? o.note : o.problems.summary() + " [" + o.note + "]")
                  << std::endl;
    };

    report("exact oracle ground truth", exact_ground_truth);
    report("lower-bound consistency", lower_bound_consistency);
    report("partition-condition oracle equivalence", partition_count_oracle);

    double grid_seconds = 0.0;
    const auto grid = run_grid(grid_seconds);
    report("pipeline validity", [&] { return pipeline_validity(grid, grid_seconds); });
    report("step 1 / step 2 edge ranges", [&] { return claim_ranges(grid); });

    report("fallback totality", fallback_totality);
    report("determinism", determinism);

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion/criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
