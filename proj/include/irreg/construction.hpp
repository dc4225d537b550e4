#pragma once

// Three-step weighting of a d-regular graph over a valid vertex partition:
//
//   Step 1  f1: window-rule weights inside B, i*omega + ceil(n/d) across B and
//           S_i, 1 elsewhere.
//   Step 2  f2 on B-S edges levels B to consecutive targets in b_order.
//   Step 3  f3 on E(S) confines each S-vertex weight to an AP class that is
//           unique within its group S_l.

#include <optional>
#include <vector>

#include "irreg/graph.hpp"
#include "irreg/params.hpp"
#include "irreg/partition.hpp"
#include "irreg/weighting.hpp"

namespace irreg {

enum class EdgeClass { big_internal, cross, small_internal };

EdgeClass edge_class(const Graph& g, const VertexPartition& vp, EdgeId e);

struct RangeViolation {
    EdgeId edge;
    EdgeClass cls;
    Weight value;
    Weight lo;
    Weight hi;
};

// ---- Step 1 ---------------------------------------------------------------

std::vector<Weight> step1_initial(const Graph& g, const ConstructionParams& p, const VertexPartition& vp);

// Per-class ranges after Step 1: E(B) in [1, floor(n/d)+2], B-S in
// [ceil(n/d), ceil(n/d)+13 omega], E(S) exactly 1.
std::optional<RangeViolation> check_step1_ranges(const Graph& g, const ConstructionParams& p,
                                                 const VertexPartition& vp, std::span<const Weight> f1);

// ---- Step 2 ---------------------------------------------------------------

// Target weight of v_k (k is 1-based in b_order).
inline Weight step2_target(const ConstructionParams& p, std::size_t k) {
    return static_cast<Weight>(k) + p.step2_offset;
}

// Spreads target(k) - f1^V(v_k) over the S-edges of v_k as evenly as
// possible, larger shares first in ascending neighbor order. Throws
// StageError(step2) on a negative surplus, a vertex without S-neighbors, or
// a share above f2_cap.
std::vector<Weight> step2_level_big(const Graph& g, const ConstructionParams& p, const VertexPartition& vp,
                                    std::span<const Weight> f1);

// Same ranges as Step 1 except B-S edges may reach ceil(n/d)+13 omega+f2_cap.
std::optional<RangeViolation> check_step2_ranges(const Graph& g, const ConstructionParams& p,
                                                 const VertexPartition& vp, std::span<const Weight> f12);

// Separation of the f12 vertex weights.
struct BufferReport {
    Weight max_big = 0;
    Weight min_small = 0;
    // min over S minus max over B; the construction needs this positive.
    Weight separation = 0;
    // min over l of (min_{S_l} - max_{S_{l-1}}) - 0.4 omega d.
    long double group_margin = 0.0L;
    [[nodiscard]] bool positive() const { return separation > 0; }
};

BufferReport measure_buffer(const Graph& g, const ConstructionParams& p, const VertexPartition& vp,
                            std::span<const Weight> f12_vertex);

// ---- Step 3 ---------------------------------------------------------------

// {2 lambda q + a, (2 lambda + 1) q + a} with 0 <= a < q.
struct APClass {
    Weight lambda = 0;
    Weight residue = 0;
    Weight q = 1;

    [[nodiscard]] Weight low() const { return 2 * lambda * q + residue; }
    [[nodiscard]] Weight high() const { return low() + q; }
    [[nodiscard]] bool contains(Weight w) const { return w == low() || w == high(); }

    // The unique class holding a non-negative w.
    static APClass containing(Weight w, Weight q) {
        return APClass{(w / q) / 2, w % q, q};
    }

    friend bool operator==(const APClass&, const APClass&) = default;
};

// Residue a in [0, q) holding the fewest prior classes, smallest a on ties.
Weight least_loaded_residue(std::span<const std::int64_t> counts);

struct SOrdering {
    // S_1..S_12 by (x, index), then each S_13 component in reversed BFS order.
    std::vector<Vertex> order;
    // S_13 components, ordered by smallest member; BFS from that member.
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> r; // second-to-last per component
    std::vector<Vertex> t; // last per component (the BFS root)
    // Position in `order`, -1 for vertices outside S.
    std::vector<long> position;
};

// Throws StageError(step3) when a component of S_13 is a single vertex.
SOrdering build_small_order(const Graph& g, const VertexPartition& vp);

struct Step3Options {
    // Re-verify f^V(u) in AP_u for every processed u after each vertex step.
    bool check_invariants = true;
};

struct Step3Result {
    std::vector<Weight> f3;                // per edge, zero outside E(S)
    std::vector<std::optional<APClass>> ap; // per vertex, set for S
};

// Throws StageError(step3) when a vertex fails deg_S(v) >= 4|S_t|/q + 2, has
// no forward edge outside T, or has no reachable unblocked weight.
Step3Result step3_distinguish_small(const Graph& g, const ConstructionParams& p, const VertexPartition& vp,
                                    std::span<const Weight> f12, const SOrdering& order,
                                    const Step3Options& options = {});

} // namespace irreg
