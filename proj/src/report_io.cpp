#include "irreg/report_io.hpp"

#include <sstream>

namespace irreg {
namespace {

using json = nlohmann::ordered_json;

template <typename T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) {
        return std::nullopt;
    }
    return v.get<T>();
}

} // namespace

json report_to_json(const SolveReport& r, bool timings) {
    json j;
    j["n"] = r.n;
    j["d"] = opt(r.d);
    j["algorithm"] = r.algorithm;
    j["achieved_k"] = opt(r.achieved_k);
    j["safe_lower"] = r.safe_lower;
    j["paper_lower"] = opt(r.paper_lower);
    j["thm_general"] = opt(r.thm_general);
    if (r.thm_dense) {
        j["thm_dense"] = json{{"num", r.thm_dense->num}, {"den", r.thm_dense->den}, {"value", r.thm_dense->to_double()}};
    } else {
        j["thm_dense"] = nullptr;
    }
    j["thm_dense_applicable"] = opt(r.thm_dense_applicable);
    j["valid"] = r.valid;
    j["stage_failure"] = opt(r.stage_failure);
    j["resamples"] = r.resamples;
    j["timings_ms"] = json::object();
    if (timings) {
        for (const auto& [stage, ms] : r.timings_ms) {
            j["timings_ms"][stage] = ms;
        }
    }
    j["seed"] = r.seed;
    if (r.params) {
        const auto& p = *r.params;
        j["params"] = json{{"epsilon", p.epsilon}, {"gamma", p.gamma}, {"s_star", p.s_star},
                           {"omega", p.omega},     {"alpha", p.alpha}, {"q", p.q}};
    } else {
        j["params"] = nullptr;
    }
    return j;
}

SolveReport report_from_json(const json& j) {
    try {
        SolveReport r;
        r.n = j.at("n").get<std::int64_t>();
        r.d = get_opt<std::int64_t>(j, "d");
        r.algorithm = j.at("algorithm").get<std::string>();
        r.achieved_k = get_opt<std::int64_t>(j, "achieved_k");
        r.safe_lower = j.at("safe_lower").get<std::int64_t>();
        r.paper_lower = get_opt<std::int64_t>(j, "paper_lower");
        r.thm_general = get_opt<double>(j, "thm_general");
        if (const auto& td = j.at("thm_dense"); !td.is_null()) {
            r.thm_dense = Rational(td.at("num").get<std::int64_t>(), td.at("den").get<std::int64_t>());
        }
        r.thm_dense_applicable = get_opt<bool>(j, "thm_dense_applicable");
        r.valid = j.at("valid").get<bool>();
        r.stage_failure = get_opt<std::string>(j, "stage_failure");
        r.resamples = j.at("resamples").get<std::uint64_t>();
        for (const auto& [stage, ms] : j.at("timings_ms").items()) {
            r.timings_ms[stage] = ms.get<double>();
        }
        r.seed = j.at("seed").get<std::uint64_t>();
        if (const auto& p = j.at("params"); !p.is_null()) {
            r.params = ParamsEcho{p.at("epsilon").get<double>(), p.at("gamma").get<double>(),
                                  p.at("s_star").get<std::int64_t>(), p.at("omega").get<std::int64_t>(),
                                  p.at("alpha").get<double>(), p.at("q").get<std::int64_t>()};
        }
        return r;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed report: ") + e.what());
    }
}

std::string serialize_report(const SolveReport& r, bool timings) { return report_to_json(r, timings).dump(2) + "\n"; }

SolveReport parse_report(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed report: ") + e.what());
    }
    return report_from_json(j);
}

void save_weighting(const Graph& g, std::span<const Weight> w, std::ostream& out) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << w[e] << '\n';
    }
}

EdgeWeighting load_weighting(const Graph& g, std::istream& in) {
    std::vector<Weight> w(g.num_edges(), 0);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        long long u = 0;
        long long v = 0;
        long long x = 0;
        if (!(ls >> u)) {
            continue; // blank
        }
        std::string rest;
        if (!(ls >> v >> x) || (ls >> rest)) {
            throw FormatError("line " + std::to_string(lineno) + ": expected 'u v w'");
        }
        const auto n = static_cast<long long>(g.num_vertices());
        if (u < 0 || v < 0 || u >= n || v >= n || u == v || !g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
            throw WeightingError("line " + std::to_string(lineno) + ": " + std::to_string(u) + " " +
                                 std::to_string(v) + " is not an edge of the graph");
        }
        const EdgeId e = g.edge_id(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (w[e] != 0) {
            throw WeightingError("line " + std::to_string(lineno) + ": edge weighted twice");
        }
        if (x < 1) {
            throw WeightingError("line " + std::to_string(lineno) + ": weight below 1");
        }
        w[e] = x;
    }
    if (in.bad()) {
        throw FormatError("read error");
    }
    for (EdgeId e = 0; e < w.size(); ++e) {
        if (w[e] == 0) {
            throw WeightingError("edge " + std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) +
                                 " has no weight");
        }
    }
    return EdgeWeighting(g, std::move(w));
}

} // namespace irreg
