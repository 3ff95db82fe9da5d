#pragma once

#include "tsagg/core.hpp"
#include "tsagg/hierarchy.hpp"
#include "tsagg/segmentation.hpp"

#include <cstddef>
#include <vector>

namespace tsagg {

struct MetricsReport {
    double rmse_tot = 0.0;
    std::vector<double> rmse_per_attribute;
    std::vector<double> duration_rmse_per_attribute;
    std::size_t total_steps = 0;
    double reduction_ratio = 0.0;
};

/// Full-length normalized series in which every original step takes the value
/// of the segment containing it in its cluster's representative.
Matrix reconstruct(const PeriodFrame& frame, const ClusterResult& clusters,
                   const SegmentedRepresentatives& segmented);

/// Root-mean-square error over all attributes and time steps.
double rmse_tot(const Matrix& original, const Matrix& aggregated);

/// Per-attribute chronological RMSE.
std::vector<double> rmse_per_attribute(const Matrix& original, const Matrix& aggregated);

/// Per-attribute RMSE between the descending-sorted columns.
std::vector<double> duration_curve_rmse(const Matrix& original, const Matrix& aggregated);

/// Descending duration curve of one column.
std::vector<double> duration_curve(const Matrix& values, std::size_t column);

/// reduction_ratio = 1 - total_steps / original_steps.
MetricsReport make_report(const Matrix& original, const Matrix& aggregated, std::size_t total_steps);

} // namespace tsagg
