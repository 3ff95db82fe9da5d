#pragma once

#include "tsagg/core.hpp"
#include "tsagg/hierarchy.hpp"
#include "tsagg/representation.hpp"
#include "tsagg/segmentation.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace tsagg {

/// Ascending grid 1, round(sqrt(2)^i)..., deduplicated, capped at and ending
/// with max_value.
std::vector<std::size_t> build_grid(std::size_t max_value);

struct PathwayState {
    std::size_t periods = 1;
    std::size_t segments = 1;
    double rmse = 0.0;

    std::size_t total_steps() const noexcept { return periods * segments; }
};

enum class Direction { start, more_periods, more_segments };

std::string_view to_string(Direction direction);

struct PathwayStep {
    PathwayState state;
    /// How this state was reached from the previous one.
    Direction direction = Direction::start;
    /// Descent ratios evaluated at the previous state; empty when that
    /// dimension was already exhausted.
    std::optional<double> ratio_periods;
    std::optional<double> ratio_segments;
};

struct PathwayTrace {
    std::vector<std::size_t> period_grid;
    std::vector<std::size_t> segment_grid;
    std::vector<PathwayStep> steps;
};

/// Everything produced by the aggregation pipeline for one configuration.
struct Aggregation {
    ClusterResult clusters;
    SegmentedRepresentatives segmented;
    Matrix reconstruction;
};

/// Runs cluster -> represent -> segment -> reconstruct -> rmse for
/// (typical periods, segments) pairs of one frame and one representation
/// method. The period linkage is computed once and RMSE values are cached.
///
/// The frame must outlive the evaluator.
class ConfigEvaluator {
public:
    ConfigEvaluator(const PeriodFrame& frame, RepresentationMethod method);

    const PeriodFrame& frame() const noexcept { return frame_; }
    RepresentationMethod method() const noexcept { return method_; }
    const Linkage& linkage() const noexcept { return linkage_; }

    Aggregation aggregate(std::size_t periods, std::size_t segments) const;
    PathwayState evaluate(std::size_t periods, std::size_t segments);

    std::size_t cache_size() const noexcept { return cache_.size(); }

private:
    void check_range(std::size_t periods, std::size_t segments) const;

    const PeriodFrame& frame_;
    RepresentationMethod method_;
    Linkage linkage_;
    Matrix original_;
    std::map<std::pair<std::size_t, std::size_t>, double> cache_;
};

/// Steepest-descent walk over the grids from (1, 1). At each step both grid
/// successors are evaluated and the one with the smaller RMSE change per added
/// total time step is taken (segments win ties). Stops when both grids are
/// exhausted or once total steps exceed max_total_steps.
PathwayTrace pathway_search(ConfigEvaluator& evaluator,
                            std::optional<std::size_t> max_total_steps = std::nullopt);

PathwayTrace pathway_search(const PeriodFrame& frame, RepresentationMethod method,
                            std::optional<std::size_t> max_total_steps = std::nullopt);

/// Last trace state whose total steps fit the budget.
PathwayState select_config(const PathwayTrace& trace, std::int64_t budget);

} // namespace tsagg
