#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "irreg/graph.hpp"
#include "irreg/solve_report.hpp"
#include "irreg/weighting.hpp"

namespace irreg {

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Keys in SolveReport field order; absent optionals are null. With
// timings = false the timings object is written empty.
nlohmann::ordered_json report_to_json(const SolveReport& r, bool timings = true);
SolveReport report_from_json(const nlohmann::ordered_json& j);
std::string serialize_report(const SolveReport& r, bool timings = true);
// Throws FormatError on malformed input.
SolveReport parse_report(std::string_view text);

// "u v w" per edge, u < v, in EdgeId order.
void save_weighting(const Graph& g, std::span<const Weight> w, std::ostream& out);

// Reads "u v w" lines ('#' comments, either endpoint order). Throws
// FormatError on unparsable lines and WeightingError when an edge is missing,
// repeated, not in the graph, or weighted below 1.
EdgeWeighting load_weighting(const Graph& g, std::istream& in);

} // namespace irreg
