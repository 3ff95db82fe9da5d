#include "support/oracles.hpp"
#include "support/synthetic.hpp"
#include "tsagg/errors.hpp"
#include "tsagg/segmentation.hpp"

#include <doctest.h>

#include <cmath>

using namespace tsagg;

namespace {

RepresentativeSet reps_from(const Matrix& profiles, std::size_t steps, std::size_t attrs) {
    RepresentativeSet reps;
    reps.steps_per_period = steps;
    reps.n_attributes = attrs;
    reps.profiles = profiles;
    reps.weights.assign(profiles.rows(), 1);
    return reps;
}

void check_partition(const PeriodSegments& segments, std::size_t steps, std::size_t n_segments) {
    REQUIRE(segments.size() == n_segments);
    std::size_t next = 0;
    for (const auto& seg : segments) {
        CHECK(seg.start_step == next);
        CHECK(seg.length_steps >= 1);
        next += seg.length_steps;
    }
    CHECK(next == steps);
}

} // namespace

TEST_CASE("full segment count reproduces the profile") {
    const auto profile = synthetic::random_matrix(24, 2, 4);
    const auto segments = segment_period(profile, 24);
    check_partition(segments, 24, 24);
    for (std::size_t t = 0; t < 24; ++t) {
        CHECK(segments[t].length_steps == 1);
        CHECK(segments[t].values[0] == profile(t, 0));
        CHECK(segments[t].values[1] == profile(t, 1));
    }
}

TEST_CASE("one segment holds the period mean") {
    const Matrix profile(4, 1, {1, 2, 3, 6});
    const auto segments = segment_period(profile, 1);
    check_partition(segments, 4, 1);
    CHECK(segments[0].values[0] == 3.0);
}

TEST_CASE("two segments split a step profile at its jump") {
    const Matrix profile(4, 1, {0, 0, 10, 10});
    const auto best = oracle::best_contiguous(profile, 2);
    REQUIRE(best == oracle::Partition{{0, 1}, {2, 3}});
    const auto segments = segment_period(profile, 2);
    check_partition(segments, 4, 2);
    CHECK(segments[0].start_step == 0);
    CHECK(segments[0].length_steps == 2);
    CHECK(segments[0].values[0] == 0.0);
    CHECK(segments[1].start_step == 2);
    CHECK(segments[1].length_steps == 2);
    CHECK(segments[1].values[0] == 10.0);
}

TEST_CASE("segment count out of range") {
    const Matrix profile(4, 1, 0.0);
    CHECK_THROWS_AS(segment_period(profile, 0), ConfigError);
    CHECK_THROWS_AS(segment_period(profile, 5), ConfigError);
}

TEST_CASE("segments partition the period and conserve its mean") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t steps = 6 + seed % 19;
        const auto profile = synthetic::random_matrix(steps, 2, seed + 50);
        for (std::size_t n_seg = 1; n_seg <= steps; ++n_seg) {
            const auto segments = segment_period(profile, n_seg);
            check_partition(segments, steps, n_seg);
            for (std::size_t a = 0; a < 2; ++a) {
                double original = 0.0;
                for (std::size_t t = 0; t < steps; ++t) {
                    original += profile(t, a);
                }
                double weighted = 0.0;
                for (const auto& seg : segments) {
                    weighted += static_cast<double>(seg.length_steps) * seg.values[a];
                }
                CHECK(std::abs(weighted - original) / static_cast<double>(steps) < 1e-12);
            }
        }
    }
}

TEST_CASE("one more segment splits exactly one coarser segment") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto profile = synthetic::random_matrix(24, 1, seed + 300);
        for (std::size_t n_seg = 1; n_seg < 24; ++n_seg) {
            const auto coarse = segment_period(profile, n_seg);
            const auto fine = segment_period(profile, n_seg + 1);
            std::vector<std::size_t> coarse_starts, fine_starts;
            for (const auto& s : coarse) {
                coarse_starts.push_back(s.start_step);
            }
            for (const auto& s : fine) {
                fine_starts.push_back(s.start_step);
            }
            // fine boundaries are the coarse ones plus exactly one more
            std::vector<std::size_t> extra;
            std::set_difference(fine_starts.begin(), fine_starts.end(), coarse_starts.begin(),
                                coarse_starts.end(), std::back_inserter(extra));
            CHECK(extra.size() == 1);
            CHECK(std::includes(fine_starts.begin(), fine_starts.end(), coarse_starts.begin(),
                                coarse_starts.end()));
        }
    }
}

TEST_CASE("segmenting eight typical days into eight segments gives 64 steps") {
    const auto reps = reps_from(synthetic::random_matrix(8, 24, 77), 24, 1);
    const auto segmented = segment_representatives(reps, 8);
    CHECK(segmented.total_steps() == 64);
    REQUIRE(segmented.layout.size() == 8);
    std::size_t rows = 0;
    for (const auto& period : segmented.layout) {
        check_partition(period, 24, 8);
        rows += period.size();
    }
    CHECK(rows == 64);
}

TEST_CASE("full-resolution segmentation leaves representatives unchanged") {
    const auto reps = reps_from(synthetic::random_matrix(3, 12 * 2, 5), 12, 2);
    const auto segmented = segment_representatives(reps, 12);
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t t = 0; t < 12; ++t) {
            CHECK(segmented.layout[c][t].length_steps == 1);
            CHECK(segmented.layout[c][t].values[0] == reps.at(c, t, 0));
            CHECK(segmented.layout[c][t].values[1] == reps.at(c, t, 1));
        }
    }
}

TEST_CASE("identical representatives get identical layouts") {
    const auto one = synthetic::random_matrix(1, 24, 6);
    Matrix profiles(2, 24);
    std::ranges::copy(one.row(0), profiles.row(0).begin());
    std::ranges::copy(one.row(0), profiles.row(1).begin());
    const auto segmented = segment_representatives(reps_from(profiles, 24, 1), 5);
    for (std::size_t s = 0; s < 5; ++s) {
        CHECK(segmented.layout[0][s].start_step == segmented.layout[1][s].start_step);
        CHECK(segmented.layout[0][s].length_steps == segmented.layout[1][s].length_steps);
        CHECK(segmented.layout[0][s].values == segmented.layout[1][s].values);
    }
}
