#include "tsagg/pathway.hpp"

#include "tsagg/errors.hpp"
#include "tsagg/metrics.hpp"

#include <cmath>
#include <string>

namespace tsagg {

std::vector<std::size_t> build_grid(std::size_t max_value) {
    if (max_value < 1) {
        throw ConfigError("grid maximum must be at least 1");
    }
    std::vector<std::size_t> grid;
    for (int i = 0;; ++i) {
        // sqrt(2)^i, exact for even i
        const double power = std::ldexp(i % 2 == 0 ? 1.0 : std::sqrt(2.0), i / 2);
        const auto value = static_cast<std::size_t>(std::llround(power));
        if (value >= max_value) {
            break;
        }
        if (grid.empty() || grid.back() != value) {
            grid.push_back(value);
        }
    }
    grid.push_back(max_value);
    return grid;
}

std::string_view to_string(Direction direction) {
    switch (direction) {
    case Direction::start:
        return "start";
    case Direction::more_periods:
        return "more_periods";
    case Direction::more_segments:
        return "more_segments";
    }
    return "unknown";
}

ConfigEvaluator::ConfigEvaluator(const PeriodFrame& frame, RepresentationMethod method)
    : frame_(frame), method_(method), linkage_(ward_linkage(frame.rows)), original_(unroll(frame)) {}

void ConfigEvaluator::check_range(std::size_t periods, std::size_t segments) const {
    if (periods < 1 || periods > frame_.n_periods) {
        throw ConfigError("typical period count " + std::to_string(periods) + " outside [1, " +
                          std::to_string(frame_.n_periods) + "]");
    }
    if (segments < 1 || segments > frame_.steps_per_period) {
        throw ConfigError("segment count " + std::to_string(segments) + " outside [1, " +
                          std::to_string(frame_.steps_per_period) + "]");
    }
}

Aggregation ConfigEvaluator::aggregate(std::size_t periods, std::size_t segments) const {
    check_range(periods, segments);
    Aggregation result;
    result.clusters = cut(linkage_, periods);
    result.segmented =
        segment_representatives(represent(frame_, result.clusters, method_), segments);
    result.reconstruction = reconstruct(frame_, result.clusters, result.segmented);
    return result;
}

PathwayState ConfigEvaluator::evaluate(std::size_t periods, std::size_t segments) {
    check_range(periods, segments);
    const auto key = std::make_pair(periods, segments);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        const auto result = aggregate(periods, segments);
        it = cache_.emplace(key, rmse_tot(original_, result.reconstruction)).first;
    }
    return PathwayState{periods, segments, it->second};
}

PathwayTrace pathway_search(ConfigEvaluator& evaluator, std::optional<std::size_t> max_total_steps) {
    PathwayTrace trace;
    trace.period_grid = build_grid(evaluator.frame().n_periods);
    trace.segment_grid = build_grid(evaluator.frame().steps_per_period);
    const auto& pgrid = trace.period_grid;
    const auto& sgrid = trace.segment_grid;

    std::size_t pi = 0;
    std::size_t si = 0;
    PathwayState current = evaluator.evaluate(pgrid[pi], sgrid[si]);
    trace.steps.push_back(PathwayStep{current, Direction::start, std::nullopt, std::nullopt});

    while (!max_total_steps || current.total_steps() <= *max_total_steps) {
        PathwayStep step;
        std::optional<PathwayState> by_periods;
        std::optional<PathwayState> by_segments;
        if (pi + 1 < pgrid.size()) {
            by_periods = evaluator.evaluate(pgrid[pi + 1], sgrid[si]);
            step.ratio_periods = (by_periods->rmse - current.rmse) /
                                 static_cast<double>(current.segments * (pgrid[pi + 1] - pgrid[pi]));
        }
        if (si + 1 < sgrid.size()) {
            by_segments = evaluator.evaluate(pgrid[pi], sgrid[si + 1]);
            step.ratio_segments = (by_segments->rmse - current.rmse) /
                                  static_cast<double>(current.periods * (sgrid[si + 1] - sgrid[si]));
        }
        if (!by_periods && !by_segments) {
            break;
        }
        const bool take_segments =
            by_segments && (!by_periods || *step.ratio_segments <= *step.ratio_periods);
        if (take_segments) {
            ++si;
            current = *by_segments;
            step.direction = Direction::more_segments;
        } else {
            ++pi;
            current = *by_periods;
            step.direction = Direction::more_periods;
        }
        step.state = current;
        trace.steps.push_back(step);
    }
    return trace;
}

PathwayTrace pathway_search(const PeriodFrame& frame, RepresentationMethod method,
                            std::optional<std::size_t> max_total_steps) {
    ConfigEvaluator evaluator(frame, method);
    return pathway_search(evaluator, max_total_steps);
}

PathwayState select_config(const PathwayTrace& trace, std::int64_t budget) {
    if (budget < 1) {
        throw ConfigError("budget must be at least 1 total time step");
    }
    if (trace.steps.empty()) {
        throw ConfigError("cannot select from an empty pathway");
    }
    const PathwayState* selected = &trace.steps.front().state;
    for (const auto& step : trace.steps) {
        if (step.state.total_steps() <= static_cast<std::uint64_t>(budget)) {
            selected = &step.state;
        }
    }
    return *selected;
}

} // namespace tsagg
