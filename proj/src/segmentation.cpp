#include "tsagg/segmentation.hpp"

#include "tsagg/errors.hpp"
#include "tsagg/hierarchy.hpp"

#include <string>

namespace tsagg {

PeriodSegments segment_period(const Matrix& profile, std::size_t n_segments) {
    const std::size_t steps = profile.rows();
    if (n_segments < 1 || n_segments > steps) {
        throw ConfigError("segment count " + std::to_string(n_segments) + " outside [1, " +
                          std::to_string(steps) + "]");
    }
    const auto chain = Connectivity::chain(steps);
    const auto clusters = ward_cluster(profile, n_segments, &chain);

    // Labels are ordered by first member, and chain clusters are intervals,
    // so label order is segment order.
    PeriodSegments segments(n_segments);
    for (auto& seg : segments) {
        seg.values.assign(profile.cols(), 0.0);
    }
    for (std::size_t t = 0; t < steps; ++t) {
        Segment& seg = segments[clusters.assignment[t]];
        if (seg.length_steps == 0) {
            seg.start_step = t;
        }
        ++seg.length_steps;
        for (std::size_t a = 0; a < profile.cols(); ++a) {
            seg.values[a] += profile(t, a);
        }
    }
    for (auto& seg : segments) {
        for (double& v : seg.values) {
            v /= static_cast<double>(seg.length_steps);
        }
    }
    return segments;
}

Matrix profile_matrix(const RepresentativeSet& reps, std::size_t cluster) {
    const auto row = reps.profiles.row(cluster);
    return Matrix(reps.steps_per_period, reps.n_attributes,
                  std::vector<double>(row.begin(), row.end()));
}

SegmentedRepresentatives segment_representatives(const RepresentativeSet& reps,
                                                 std::size_t n_segments) {
    SegmentedRepresentatives out;
    out.n_segments = n_segments;
    out.layout.reserve(reps.k());
    for (std::size_t c = 0; c < reps.k(); ++c) {
        out.layout.push_back(segment_period(profile_matrix(reps, c), n_segments));
    }
    out.representatives = reps;
    return out;
}

} // namespace tsagg
