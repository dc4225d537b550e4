#include "irreg/cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "irreg/exact.hpp"
#include "irreg/fallback.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph_io.hpp"
#include "irreg/pipeline.hpp"
#include "irreg/report_io.hpp"

namespace irreg::cli {
namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string number(double x) { return nlohmann::json(x).dump(); }

template <typename T>
std::string cell(const std::optional<T>& v) {
    if (!v) {
        return "";
    }
    if constexpr (std::is_same_v<T, double>) {
        return number(*v);
    } else if constexpr (std::is_same_v<T, bool>) {
        return *v ? "true" : "false";
    } else if constexpr (std::is_same_v<T, std::string>) {
        return *v;
    } else {
        return std::to_string(*v);
    }
}

const std::vector<std::string> kTimingColumns{"gen",   "params", "partition", "step1", "step2",
                                              "buffer", "step3", "verify",    "fallback", "exact"};

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("not an integer: " + s);
    }
    return v;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const auto v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("not a number: " + s);
    }
    return v;
}

ResamplePolicy parse_policy(const std::string& s) {
    if (s == "local-first") {
        return ResamplePolicy::local_first;
    }
    if (s == "moser-tardos") {
        return ResamplePolicy::moser_tardos;
    }
    throw UsageError("unknown policy: " + s);
}

Graph read_graph(const std::string& path) {
    try {
        return load_edge_list_file(path);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw UsageError("cannot write " + path);
    }
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void fallback_into(SolveOutcome& o, const Graph& g, const SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    o.weighting = fallback_greedy(g, options.seed);
    o.report.timings_ms["fallback"] = elapsed_ms(start);
}

int cmd_gen(const std::string& family, std::size_t n, std::size_t d, const std::vector<std::size_t>& connections,
            std::uint64_t seed, const std::string& out_path, std::ostream& out) {
    GraphFamilySpec spec;
    try {
        spec.family = parse_family(family);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    spec.n = n;
    spec.d = d;
    spec.connections = connections;
    spec.seed = seed;
    Graph g;
    try {
        g = generate(spec);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    write_text(out_path, to_edge_list(g), out);
    return kExitOk;
}

int cmd_solve(const std::string& in, const SolveOptions& options, const std::string& report_path,
              const std::string& weights_path, bool timings, std::ostream& out, std::ostream& err) {
    const auto g = read_graph(in);
    auto o = solve_graph(g, options);
    if (!o.message.empty()) {
        err << o.message << '\n';
    }
    if (o.weighting) {
        std::ostringstream ws;
        save_weighting(g, o.weighting->values(), ws);
        write_text(weights_path, ws.str(), out);
    }
    if (!report_path.empty()) {
        write_text(report_path, serialize_report(o.report, timings), out);
    }
    return o.exit_code;
}

int cmd_verify(const std::string& in, const std::string& weights_path, const std::string& report_path,
               std::ostream& out, std::ostream& err) {
    const auto g = read_graph(in);
    const auto text = read_text(weights_path);
    EdgeWeighting w;
    try {
        std::istringstream ws(text);
        w = load_weighting(g, ws);
    } catch (const FormatError& e) {
        throw UsageError(weights_path + ": " + e.what());
    } catch (const WeightingError& e) {
        err << "invalid weighting: " << e.what() << '\n';
        return kExitInvalid;
    }
    const auto check = is_irregular(g, w);
    if (!check) {
        err << "collision: vertices " << check.collision->first << " and " << check.collision->second
            << " both have weight " << check.collision_weight << '\n';
        return kExitInvalid;
    }
    if (!report_path.empty()) {
        SolveReport r;
        try {
            r = parse_report(read_text(report_path));
        } catch (const FormatError& e) {
            throw UsageError(report_path + ": " + e.what());
        }
        if (r.n != static_cast<std::int64_t>(g.num_vertices())) {
            err << "report is for a graph on " << r.n << " vertices\n";
            return kExitInvalid;
        }
        if (r.achieved_k && *r.achieved_k != w.k()) {
            err << "report claims k = " << *r.achieved_k << " but the weighting has k = " << w.k() << '\n';
            return kExitInvalid;
        }
        if (r.params && r.d && !r.stage_failure && (r.algorithm == "paper" || r.algorithm == "auto")) {
            const auto p = derive_params(r.n, *r.d, r.params->epsilon, r.params->gamma);
            if (w.k() > construction_weight_bound(p)) {
                err << "k = " << w.k() << " exceeds the construction bound " << construction_weight_bound(p) << '\n';
                return kExitInvalid;
            }
        }
    }
    out << "ok: " << g.num_vertices() << " distinct vertex weights, k = " << w.k() << '\n';
    return kExitOk;
}

int cmd_bench(const std::string& grid_spec, const BenchOptions& options, const std::string& out_path,
              std::ostream& out) {
    std::vector<GridPoint> grid;
    try {
        grid = parse_grid(grid_spec);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad grid: ") + e.what());
    }
    for (const auto& pt : grid) {
        if (pt.d < 1 || pt.d >= pt.n || (pt.n * pt.d) % 2 != 0) {
            throw UsageError("no " + std::to_string(pt.d) + "-regular graph on " + std::to_string(pt.n) +
                             " vertices");
        }
    }
    write_text(out_path, bench_csv(grid, options), out);
    return kExitOk;
}

} // namespace

SolveOutcome solve_graph(const Graph& g, const SolveOptions& options) {
    SolveOutcome o;
    auto& report = o.report;
    report.algorithm = options.algo;
    report.seed = options.seed;
    fill_bounds(report, g, options.epsilon, options.gamma);
    if (!finite_strength(g)) {
        o.exit_code = kExitInfinite;
        o.message = "graph has infinite irregularity strength";
        return o;
    }
    if (options.algo == "paper" || options.algo == "auto") {
        PipelineConfig config;
        config.epsilon = options.epsilon;
        config.gamma = options.gamma;
        config.seed = options.seed;
        config.budget = options.budget;
        config.policy = options.policy;
        auto run = run_pipeline(g, config);
        run.report.algorithm = options.algo;
        report = std::move(run.report);
        if (run.ok()) {
            o.weighting = std::move(run.weighting);
        } else {
            o.message = run.failure;
            if (options.algo == "paper") {
                o.exit_code = kExitPipeline;
                return o;
            }
            fallback_into(o, g, options);
        }
    } else if (options.algo == "fallback") {
        fallback_into(o, g, options);
    } else if (options.algo == "exact") {
        const auto start = std::chrono::steady_clock::now();
        try {
            auto res = exact_strength(g);
            o.weighting = std::move(res.witness);
        } catch (const ExactBudgetError& e) {
            o.message = e.what();
            o.exit_code = kExitPipeline;
        }
        report.timings_ms["exact"] = elapsed_ms(start);
        if (!o.weighting) {
            return o;
        }
    } else {
        throw std::invalid_argument("unknown algorithm: " + options.algo);
    }
    if (!is_irregular(g, *o.weighting)) {
        throw std::logic_error("solver produced a weighting with a collision");
    }
    report.valid = true;
    report.achieved_k = o.weighting->k();
    return o;
}

std::vector<GridPoint> parse_grid(std::string_view spec) {
    std::vector<std::int64_t> ns;
    std::vector<std::string> ds;
    std::vector<double> eps{0.1};
    std::vector<double> gammas{0.04};
    std::vector<std::uint64_t> seeds{1};
    bool have_n = false;
    bool have_d = false;
    for (const auto& part : split(spec, ';')) {
        const auto item = trim(part);
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("expected key=values: " + item);
        }
        const auto key = trim(item.substr(0, eq));
        std::vector<std::string> values;
        for (const auto& v : split(item.substr(eq + 1), ',')) {
            values.push_back(trim(v));
            if (values.back().empty()) {
                throw std::invalid_argument("empty value for " + key);
            }
        }
        if (key == "n") {
            ns.clear();
            for (const auto& v : values) {
                ns.push_back(parse_int(v));
            }
            have_n = true;
        } else if (key == "d") {
            ds = values;
            have_d = true;
        } else if (key == "eps") {
            eps.clear();
            for (const auto& v : values) {
                eps.push_back(parse_double(v));
            }
        } else if (key == "gamma") {
            gammas.clear();
            for (const auto& v : values) {
                gammas.push_back(parse_double(v));
            }
        } else if (key == "seeds") {
            seeds.clear();
            for (const auto& v : values) {
                const auto s = parse_int(v);
                if (s < 0) {
                    throw std::invalid_argument("negative seed");
                }
                seeds.push_back(static_cast<std::uint64_t>(s));
            }
        } else {
            throw std::invalid_argument("unknown key: " + key);
        }
    }
    if (!have_n || !have_d) {
        throw std::invalid_argument("grid needs n and d");
    }
    std::vector<GridPoint> grid;
    for (const auto n : ns) {
        for (const auto& dv : ds) {
            std::int64_t d = 0;
            if (dv.rfind("n/", 0) == 0) {
                const auto k = parse_int(dv.substr(2));
                if (k <= 0) {
                    throw std::invalid_argument("bad divisor in " + dv);
                }
                d = n / k;
            } else {
                d = parse_int(dv);
            }
            for (const auto e : eps) {
                for (const auto gm : gammas) {
                    for (const auto s : seeds) {
                        grid.push_back(GridPoint{n, d, e, gm, s});
                    }
                }
            }
        }
    }
    return grid;
}

std::string bench_csv(const std::vector<GridPoint>& grid, const BenchOptions& options) {
    std::vector<std::string> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < grid.size(); i = next++) {
            const auto& pt = grid[i];
            const auto start = std::chrono::steady_clock::now();
            const auto g = random_regular(static_cast<std::size_t>(pt.n), static_cast<std::size_t>(pt.d), pt.seed);
            const double gen_ms = elapsed_ms(start);
            SolveOptions so;
            so.algo = options.algo;
            so.epsilon = pt.epsilon;
            so.gamma = pt.gamma;
            so.seed = pt.seed;
            so.budget = options.budget;
            so.policy = options.policy;
            auto o = solve_graph(g, so);
            auto& r = o.report;
            r.timings_ms["gen"] = gen_ms;
            std::ostringstream row;
            row << pt.n << ',' << pt.d << ',' << number(pt.epsilon) << ',' << number(pt.gamma) << ',' << pt.seed
                << ',' << r.algorithm << ',' << (r.valid ? "true" : "false") << ',' << cell(r.achieved_k) << ','
                << r.safe_lower << ',' << cell(r.paper_lower) << ',' << cell(r.thm_general) << ','
                << (r.thm_dense ? r.thm_dense->str() : "") << ',' << cell(r.thm_dense_applicable) << ','
                << cell(r.stage_failure) << ',' << r.resamples << ',';
            if (r.params) {
                row << r.params->s_star << ',' << r.params->omega << ',' << number(r.params->alpha) << ','
                    << r.params->q;
            } else {
                row << ",,,";
            }
            if (options.timings) {
                for (const auto& c : kTimingColumns) {
                    const auto it = r.timings_ms.find(c);
                    row << ',' << (it == r.timings_ms.end() ? "" : number(it->second));
                }
            }
            rows[i] = row.str();
        }
    };
    const auto jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(grid.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    std::ostringstream csv;
    csv << "n,d,eps,gamma,seed,algorithm,valid,achieved_k,safe_lower,paper_lower,thm_general,thm_dense,"
           "thm_dense_applicable,stage_failure,resamples,s_star,omega,alpha,q";
    if (options.timings) {
        for (const auto& c : kTimingColumns) {
            csv << ",time_" << c << "_ms";
        }
    }
    csv << '\n';
    for (const auto& r : rows) {
        csv << r << '\n';
    }
    return csv.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Irregular edge weightings of regular graphs"};
    app.require_subcommand(1);

    std::string family;
    std::size_t gen_n = 0;
    std::size_t gen_d = 0;
    std::vector<std::size_t> connections;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
    gen->add_option("--family", family, "random-regular, complete, cycle, circulant, hypercube or petersen")->required();
    gen->add_option("--n", gen_n, "Number of vertices");
    gen->add_option("--d", gen_d, "Degree (random-regular) or dimension (hypercube)");
    gen->add_option("--connections", connections, "Circulant offsets")->delimiter(',');
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

    std::string in;
    SolveOptions so;
    std::string policy = "moser-tardos";
    std::string report_path;
    std::string weights_path;
    bool no_timings = false;
    auto* solve = app.add_subcommand("solve", "Compute an irregular weighting");
    solve->add_option("--in", in, "Edge-list file")->required();
    solve->add_option("--algo", so.algo, "paper, fallback, exact or auto")
        ->check(CLI::IsMember({"paper", "fallback", "exact", "auto"}));
    solve->add_option("--eps", so.epsilon, "epsilon");
    solve->add_option("--gamma", so.gamma, "gamma");
    solve->add_option("--seed", so.seed, "Random seed");
    solve->add_option("--budget", so.budget, "Resampling rounds");
    solve->add_option("--policy", policy, "local-first or moser-tardos");
    solve->add_option("--report", report_path, "JSON report file");
    solve->add_option("--weights-out", weights_path, "Weighting file (stdout if omitted)");
    solve->add_flag("--no-timings", no_timings, "Leave timings out of the report");

    std::string verify_in;
    std::string verify_weights;
    std::string verify_report;
    auto* verify = app.add_subcommand("verify", "Check a weighting");
    verify->add_option("--in", verify_in, "Edge-list file")->required();
    verify->add_option("--weights", verify_weights, "Weighting file")->required();
    verify->add_option("--report", verify_report, "Report to cross-check");

    std::string grid;
    std::string bench_out;
    BenchOptions bo;
    std::string bench_policy = "moser-tardos";
    bool bench_no_timings = false;
    auto* bench = app.add_subcommand("bench", "Run a grid of random regular graphs");
    bench->add_option("--grid", grid, "n=...;d=...;eps=...;gamma=...;seeds=...")->required();
    bench->add_option("--out", bench_out, "CSV file (stdout if omitted)");
    bench->add_option("--algo", bo.algo, "paper, fallback, exact or auto")
        ->check(CLI::IsMember({"paper", "fallback", "exact", "auto"}));
    bench->add_option("--budget", bo.budget, "Resampling rounds");
    bench->add_option("--policy", bench_policy, "local-first or moser-tardos");
    bench->add_option("--jobs", bo.jobs, "Worker threads");
    bench->add_flag("--no-timings", bench_no_timings, "Omit timing columns");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            return cmd_gen(family, gen_n, gen_d, connections, gen_seed, gen_out, out);
        }
        if (*solve) {
            so.policy = parse_policy(policy);
            return cmd_solve(in, so, report_path, weights_path, !no_timings, out, err);
        }
        if (*verify) {
            return cmd_verify(verify_in, verify_weights, verify_report, out, err);
        }
        bo.policy = parse_policy(bench_policy);
        bo.timings = !bench_no_timings;
        return cmd_bench(grid, bo, bench_out, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InfiniteStrengthError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInfinite;
    }
}

} // namespace irreg::cli
