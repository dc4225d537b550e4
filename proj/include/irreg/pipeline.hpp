#pragma once

// End-to-end construction for a d-regular graph: parameters, partition with
// resampling, Steps 1-3, buffer guard and a final verification.

#include <cstdint>
#include <optional>
#include <string>

#include "irreg/conditions.hpp"
#include "irreg/construction.hpp"
#include "irreg/solve_report.hpp"
#include "irreg/stage_error.hpp"

namespace irreg {

struct PipelineConfig {
    double epsilon = 0.1;
    double gamma = 0.04;
    std::uint64_t seed = 1;
    std::size_t budget = 1000; // resampling rounds
    ResamplePolicy policy = ResamplePolicy::moser_tardos;
    bool check_invariants = true;
};

struct PipelineRun {
    SolveReport report;
    std::optional<ConstructionParams> params;
    std::optional<VertexPartition> partition;
    // Filled as far as the run got.
    WeightingLayers layers;
    std::optional<BufferReport> buffer;
    std::optional<SOrdering> order;
    std::optional<Step3Result> step3;
    std::optional<EdgeWeighting> weighting; // only on success
    std::optional<Stage> failed_stage;
    std::string failure;

    [[nodiscard]] bool ok() const { return weighting.has_value(); }
};

// Guard failures are returned in the run (failed_stage, report.stage_failure);
// throws InfiniteStrengthError for graphs with an isolated edge or two
// isolated vertices. Non-regular input fails at the params stage.
PipelineRun run_pipeline(const Graph& g, const PipelineConfig& config = {});

// Largest edge weight the construction can produce:
// max(ceil(n/d) + 13 omega + f2_cap, 1 + 3q).
Weight construction_weight_bound(const ConstructionParams& p);

} // namespace irreg
