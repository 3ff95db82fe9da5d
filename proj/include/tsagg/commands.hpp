#pragma once

#include "tsagg/core.hpp"
#include "tsagg/metrics.hpp"
#include "tsagg/pathway.hpp"
#include "tsagg/representation.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace tsagg {

struct RunConfig {
    std::filesystem::path input;
    /// Second series for the metrics command.
    std::filesystem::path reconstruction;
    std::size_t period_length = 24;
    std::size_t typical_periods = 8;
    /// Defaults to period_length, i.e. no segmentation.
    std::optional<std::size_t> segments;
    RepresentationMethod representation = RepresentationMethod::distribution;
    NormMethod normalization = NormMethod::minmax;
    std::optional<std::int64_t> budget;
    std::filesystem::path out_dir = ".";
    bool drop_trailing = false;
};

/// Writes representatives.csv, mapping.csv and metrics.json to out_dir.
MetricsReport cmd_aggregate(const RunConfig& config);

/// Writes pathway.csv and selected.json, then aggregates at the selected
/// configuration into the same directory.
PathwayState cmd_pathway(const RunConfig& config);

/// Compares `reconstruction` against `input` in the normalized space of
/// `input` and writes metrics.json.
MetricsReport cmd_metrics(const RunConfig& config);

/// metrics.json body; per-attribute entries follow `attribute_names`.
std::string metrics_json(const MetricsReport& report, const std::vector<std::string>& attribute_names);

std::string pathway_csv(const PathwayTrace& trace);

} // namespace tsagg
