#pragma once

// The six partition conditions checked by exact counting:
//
//   1 (vSi)  deg_{S_i}(v) in [s*/13 - D, s*/13 + D]          for all v, i
//   2 (vS)   deg_S(v)     in [s* - 13D, s* + 13D]            for all v
//   3 (vB)   window(v)    in [(i-1) - D, (i-1) + D]          for v in B_i, i <= d-s*
//   4 (vB')  corrected window(v) in alpha * [(i-1) - D, (i-1) + D]
//   5 (i)    |B_1 u ... u B_i| in [i n/d - G, i n/d + G]     for 1 <= i <= d
//   6 (Si)   |S_i| in [s* n/(13d) - 2G, s* n/(13d) + 2G]     for 1 <= i <= 13
//
// with D = d^(1/2+gamma), G = n d^gamma / sqrt(d), and window(v) the number
// of neighbors of v in bins d-s*-i+1 < j <= d-s*.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "irreg/graph.hpp"
#include "irreg/params.hpp"
#include "irreg/partition.hpp"

namespace irreg {

enum class Condition { vertex_group = 0, vertex_small, vertex_window, vertex_corrected, bin_prefix, group_size };
inline constexpr std::size_t kConditionCount = 6;

std::string_view condition_name(Condition c);

// Raw counts behind the conditions.
struct ConditionCounts {
    std::size_t n = 0;
    // deg_group[v * 14 + g]: neighbors of v in group g (0 = B, 1..13 = S_g).
    std::vector<std::int32_t> deg_group;
    // Meaningful for v in B only; zero for v in S.
    std::vector<std::int32_t> window;
    std::vector<std::int32_t> corrected_window;
    std::vector<std::int64_t> bin_prefix; // index 0..d, bin_prefix[0] = 0
    std::array<std::int64_t, 14> group_size{}; // index 1..13

    [[nodiscard]] std::int32_t deg(Vertex v, int g) const { return deg_group[std::size_t{v} * 14 + static_cast<std::size_t>(g)]; }
    [[nodiscard]] std::int32_t deg_small(Vertex v) const;

    friend bool operator==(const ConditionCounts&, const ConditionCounts&) = default;
};

// Closed real interval with signed distance to its boundary.
struct Interval {
    long double lo;
    long double hi;

    [[nodiscard]] long double margin(long double x) const { return std::min(x - lo, hi - x); }
    [[nodiscard]] bool contains(long double x) const { return x >= lo && x <= hi; }
};

struct ConditionStatus {
    bool passed = true;
    std::size_t violations = 0;
    // Worst instance (smallest margin) over the family; negative when violated.
    long double margin = 0.0L;
    std::int64_t worst = -1; // vertex or index
    int worst_sub = 0;       // S_i index for vertex_group
    // First violated instance in (index, sub) order.
    std::int64_t first = -1;
    int first_sub = 0;

    friend bool operator==(const ConditionStatus&, const ConditionStatus&) = default;
};

struct ConditionReport {
    std::array<ConditionStatus, kConditionCount> status;
    ConditionCounts counts;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const ConditionStatus& operator[](Condition c) const { return status[static_cast<std::size_t>(c)]; }

    friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

// Interval of each condition; `index` is the bin of the vertex for the window
// conditions and is ignored otherwise.
Interval condition_interval(const ConstructionParams& p, Condition c, std::int64_t index = 0);

ConditionCounts count_conditions(const Graph& g, const ConstructionParams& p, const VertexPartition& vp);
ConditionReport evaluate_conditions(const ConstructionParams& p, const VertexPartition& vp, ConditionCounts counts);
ConditionReport check_conditions(const Graph& g, const ConstructionParams& p, const VertexPartition& vp);

// Which variables a violated event redraws.
enum class ResamplePolicy {
    // Every event redraws its full variable scope: X on the closed
    // neighborhood for vertex events (plus labels at v for vB'), all X for
    // the global events.
    moser_tardos,
    // As moser_tardos, except vB redraws only X_v and vB' only the labels at v.
    local_first,
};

struct ResampleResult {
    VertexPartition partition;
    std::size_t rounds = 0;
};

// Repairs violated events one at a time (lowest family, then lowest witness)
// until all six conditions hold. Throws StageError(partition) when the budget
// runs out or when d <= s*.
ResampleResult resample_until_valid(const Graph& g, const ConstructionParams& p, VertexPartition vp,
                                    std::size_t budget, std::uint64_t seed,
                                    ResamplePolicy policy = ResamplePolicy::moser_tardos);

} // namespace irreg
