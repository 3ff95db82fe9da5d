#pragma once

#include "tsagg/matrix.hpp"
#include "tsagg/representation.hpp"

#include <cstddef>
#include <vector>

namespace tsagg {

struct Segment {
    std::size_t start_step = 0;
    std::size_t length_steps = 0;
    /// Mean of the member steps, one entry per attribute.
    std::vector<double> values;
};

/// Contiguous, ordered segments covering [0, steps_per_period) of one period.
using PeriodSegments = std::vector<Segment>;

/// Representatives plus their per-period segment layout. Boundaries differ
/// between periods.
struct SegmentedRepresentatives {
    RepresentativeSet representatives;
    std::size_t n_segments = 0;
    std::vector<PeriodSegments> layout;

    std::size_t total_steps() const noexcept { return representatives.k() * n_segments; }
};

/// Chain-constrained Ward clustering of one period's time steps.
/// `profile` is steps_per_period x n_attributes.
PeriodSegments segment_period(const Matrix& profile, std::size_t n_segments);

/// Applies segment_period to every representative independently.
SegmentedRepresentatives segment_representatives(const RepresentativeSet& reps,
                                                 std::size_t n_segments);

/// The profile of representative `cluster` as a steps x attributes matrix.
Matrix profile_matrix(const RepresentativeSet& reps, std::size_t cluster);

} // namespace tsagg
