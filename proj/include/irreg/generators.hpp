#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irreg/graph.hpp"

namespace irreg {

enum class Family { random_regular, complete, cycle, circulant, hypercube, petersen };

std::string_view family_name(Family f);
// Throws GraphError on an unknown tag.
Family parse_family(std::string_view tag);

struct GraphFamilySpec {
    Family family = Family::random_regular;
    std::size_t n = 0;
    std::size_t d = 0;                    // random-regular degree; hypercube dimension
    std::vector<std::size_t> connections; // circulant offsets in [1, n/2]
    std::uint64_t seed = 0;
};

// Deterministic in the spec (including the seed). Throws GraphError on
// inconsistent parameters.
Graph generate(const GraphFamilySpec& spec);

// Configuration model with uniform edge-swap repair; restarts after
// 100*n*d failed swap attempts.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

} // namespace irreg
