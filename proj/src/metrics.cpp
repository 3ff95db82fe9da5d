#include "tsagg/metrics.hpp"

#include "tsagg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace tsagg {

namespace {

void check_same_shape(const Matrix& original, const Matrix& aggregated) {
    if (original.rows() != aggregated.rows() || original.cols() != aggregated.cols()) {
        throw DataError("shape mismatch: " + std::to_string(original.rows()) + "x" +
                        std::to_string(original.cols()) + " vs " +
                        std::to_string(aggregated.rows()) + "x" +
                        std::to_string(aggregated.cols()));
    }
    if (original.empty()) {
        throw DataError("cannot compute an error over empty series");
    }
}

} // namespace

Matrix reconstruct(const PeriodFrame& frame, const ClusterResult& clusters,
                   const SegmentedRepresentatives& segmented) {
    const auto& reps = segmented.representatives;
    if (clusters.n_samples() != frame.n_periods || reps.k() != clusters.k ||
        segmented.layout.size() != clusters.k || reps.steps_per_period != frame.steps_per_period ||
        reps.n_attributes != frame.n_attributes) {
        throw DataError("reconstruction inputs have inconsistent shapes");
    }
    const std::size_t steps = frame.steps_per_period;
    const std::size_t n_attr = frame.n_attributes;

    // Expand each representative once, then copy per original period.
    std::vector<Matrix> expanded;
    expanded.reserve(clusters.k);
    for (const auto& segments : segmented.layout) {
        Matrix profile(steps, n_attr);
        for (const auto& seg : segments) {
            for (std::size_t t = seg.start_step; t < seg.start_step + seg.length_steps; ++t) {
                for (std::size_t a = 0; a < n_attr; ++a) {
                    profile(t, a) = seg.values[a];
                }
            }
        }
        expanded.push_back(std::move(profile));
    }

    Matrix out(frame.n_steps(), n_attr);
    for (std::size_t p = 0; p < frame.n_periods; ++p) {
        const Matrix& profile = expanded[clusters.assignment[p]];
        std::ranges::copy(profile.data(), out.data().begin() +
                                              static_cast<std::ptrdiff_t>(p * steps * n_attr));
    }
    return out;
}

double rmse_tot(const Matrix& original, const Matrix& aggregated) {
    check_same_shape(original, aggregated);
    double sum = 0.0;
    for (std::size_t i = 0; i < original.data().size(); ++i) {
        const double d = aggregated.data()[i] - original.data()[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(original.data().size()));
}

std::vector<double> rmse_per_attribute(const Matrix& original, const Matrix& aggregated) {
    check_same_shape(original, aggregated);
    std::vector<double> out(original.cols(), 0.0);
    for (std::size_t a = 0; a < original.cols(); ++a) {
        double sum = 0.0;
        for (std::size_t t = 0; t < original.rows(); ++t) {
            const double d = aggregated(t, a) - original(t, a);
            sum += d * d;
        }
        out[a] = std::sqrt(sum / static_cast<double>(original.rows()));
    }
    return out;
}

std::vector<double> duration_curve(const Matrix& values, std::size_t column) {
    auto curve = values.column(column);
    std::sort(curve.begin(), curve.end(), std::greater<>());
    return curve;
}

std::vector<double> duration_curve_rmse(const Matrix& original, const Matrix& aggregated) {
    check_same_shape(original, aggregated);
    std::vector<double> out(original.cols(), 0.0);
    for (std::size_t a = 0; a < original.cols(); ++a) {
        const auto lhs = duration_curve(original, a);
        const auto rhs = duration_curve(aggregated, a);
        double sum = 0.0;
        for (std::size_t t = 0; t < lhs.size(); ++t) {
            const double d = rhs[t] - lhs[t];
            sum += d * d;
        }
        out[a] = std::sqrt(sum / static_cast<double>(lhs.size()));
    }
    return out;
}

MetricsReport make_report(const Matrix& original, const Matrix& aggregated, std::size_t total_steps) {
    MetricsReport report;
    report.rmse_tot = rmse_tot(original, aggregated);
    report.rmse_per_attribute = rmse_per_attribute(original, aggregated);
    report.duration_rmse_per_attribute = duration_curve_rmse(original, aggregated);
    report.total_steps = total_steps;
    report.reduction_ratio =
        1.0 - static_cast<double>(total_steps) / static_cast<double>(original.rows());
    return report;
}

} // namespace tsagg
