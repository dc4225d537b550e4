#include "irreg/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

namespace irreg {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::uint64_t parse_index(std::string_view tok, std::size_t lineno) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value > 0xFFFFFFFEull) {
        throw GraphError("line " + std::to_string(lineno) + ": malformed token '" + std::string(tok) + "'");
    }
    return value;
}

} // namespace

Graph load_edge_list(std::istream& in) {
    std::optional<std::size_t> declared_n;
    std::vector<Edge> edges;
    std::uint64_t max_index = 0;
    bool any_edge = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto toks = split_ws(line);
        if (toks.empty()) {
            continue;
        }
        if (toks.front() == "n") {
            if (declared_n || any_edge || toks.size() != 2) {
                throw GraphError("line " + std::to_string(lineno) + ": misplaced or malformed 'n' line");
            }
            declared_n = parse_index(toks[1], lineno);
            continue;
        }
        if (toks.size() != 2) {
            throw GraphError("line " + std::to_string(lineno) + ": expected 'u v'");
        }
        const auto u = parse_index(toks[0], lineno);
        const auto v = parse_index(toks[1], lineno);
        if (u == v) {
            throw GraphError("line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(u));
        }
        if (declared_n && (u >= *declared_n || v >= *declared_n)) {
            throw GraphError("line " + std::to_string(lineno) + ": index >= declared n = " +
                             std::to_string(*declared_n));
        }
        max_index = std::max({max_index, u, v});
        any_edge = true;
        edges.push_back(Graph::normalize(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    }

    std::size_t n = 0;
    if (declared_n) {
        n = *declared_n;
    } else if (any_edge) {
        n = static_cast<std::size_t>(max_index) + 1;
        std::vector<bool> used(n, false);
        for (const auto& e : edges) {
            used[e.u] = used[e.v] = true;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (!used[v]) {
                throw GraphError("vertex " + std::to_string(v) + " never occurs; declare 'n' to allow gaps");
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphError("cannot open " + path);
    }
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.num_vertices() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    save_edge_list(g, os);
    return os.str();
}

} // namespace irreg
