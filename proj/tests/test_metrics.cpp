#include "support/synthetic.hpp"
#include "tsagg/errors.hpp"
#include "tsagg/metrics.hpp"
#include "tsagg/pathway.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace tsagg;

namespace {

PeriodFrame normalized_frame(const Matrix& values, std::size_t steps) {
    std::vector<std::string> names;
    for (std::size_t a = 0; a < values.cols(); ++a) {
        names.push_back("a" + std::to_string(a));
    }
    const auto n = normalize(validate_and_build(values, names), NormMethod::minmax);
    return to_periods(n.values, n.params, steps);
}

} // namespace

TEST_CASE("rmse_tot examples") {
    const Matrix x(2, 1, {0, 1});
    CHECK(rmse_tot(x, x) == 0.0);
    CHECK(rmse_tot(x, Matrix(2, 1, {1, 1})) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

    const auto r = synthetic::random_matrix(50, 3, 1);
    auto shifted = r;
    for (double& v : shifted.data()) {
        v -= 0.25;
    }
    CHECK(rmse_tot(r, shifted) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK_THROWS_AS(rmse_tot(r, Matrix(50, 2)), DataError);
    CHECK_THROWS_AS(duration_curve_rmse(r, Matrix(49, 3)), DataError);
}

TEST_CASE("rmse_tot is symmetric and scales with the difference") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = synthetic::random_matrix(30, 2, seed);
        const auto b = synthetic::random_matrix(30, 2, seed + 1000);
        CHECK(rmse_tot(a, b) == rmse_tot(b, a));
        auto scaled = a;
        for (std::size_t i = 0; i < scaled.data().size(); ++i) {
            scaled.data()[i] = a.data()[i] + 3.0 * (b.data()[i] - a.data()[i]);
        }
        CHECK(rmse_tot(a, scaled) == doctest::Approx(3.0 * rmse_tot(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("duration curves ignore chronology") {
    const auto x = synthetic::random_matrix(40, 2, 9);
    Matrix permuted(40, 2);
    std::vector<std::size_t> order(40);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), std::mt19937_64(5));
    for (std::size_t t = 0; t < 40; ++t) {
        permuted(t, 0) = x(order[t], 0);
        permuted(t, 1) = x(order[t], 1);
    }
    CHECK(duration_curve_rmse(x, permuted) == std::vector<double>{0.0, 0.0});
    CHECK(duration_curve_rmse(x, x) == std::vector<double>{0.0, 0.0});
    CHECK(rmse_tot(x, permuted) > 0.0);

    const auto curve = duration_curve(Matrix(3, 1, {1, 3, 2}), 0);
    CHECK(curve == std::vector<double>{3, 2, 1});
}

TEST_CASE("duration-curve error never exceeds the chronological error") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = synthetic::random_matrix(100, 3, seed);
        const auto b = synthetic::random_matrix(100, 3, seed + 500);
        const auto chrono = rmse_per_attribute(a, b);
        const auto dc = duration_curve_rmse(a, b);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(dc[i] <= chrono[i] + 1e-15);
        }
    }
}

TEST_CASE("identity configuration reconstructs exactly") {
    const auto frame = normalized_frame(synthetic::random_matrix(10 * 6, 2, 3), 6);
    for (auto method : {RepresentationMethod::centroid, RepresentationMethod::medoid,
                        RepresentationMethod::distribution}) {
        ConfigEvaluator evaluator(frame, method);
        const auto result = evaluator.aggregate(10, 6);
        CHECK(result.reconstruction == unroll(frame));
        CHECK(rmse_tot(unroll(frame), result.reconstruction) == 0.0);
    }
}

TEST_CASE("one period and one segment reconstructs the global mean") {
    const auto frame = normalized_frame(synthetic::random_matrix(12 * 4, 2, 4), 4);
    ConfigEvaluator evaluator(frame, RepresentationMethod::centroid);
    const auto result = evaluator.aggregate(1, 1);
    const auto original = unroll(frame);
    for (std::size_t a = 0; a < 2; ++a) {
        double mean = 0.0;
        for (std::size_t t = 0; t < original.rows(); ++t) {
            mean += original(t, a);
        }
        mean /= static_cast<double>(original.rows());
        for (std::size_t t = 0; t < original.rows(); ++t) {
            CHECK(result.reconstruction(t, a) == doctest::Approx(mean).epsilon(1e-12));
        }
    }
}

TEST_CASE("reconstruction is piecewise constant within segments") {
    const auto frame = normalized_frame(synthetic::load_like(28, 2), 24);
    ConfigEvaluator evaluator(frame, RepresentationMethod::distribution);
    const auto result = evaluator.aggregate(4, 6);
    for (std::size_t p = 0; p < frame.n_periods; ++p) {
        const auto& segments = result.segmented.layout[result.clusters.assignment[p]];
        for (const auto& seg : segments) {
            for (std::size_t t = seg.start_step; t < seg.start_step + seg.length_steps; ++t) {
                CHECK(result.reconstruction(p * 24 + t, 0) == seg.values[0]);
            }
        }
    }
}

TEST_CASE("distribution reconstructions track duration curves better than centroids") {
    // Hourly typical days only: averaging inside segments can undo the
    // advantage (seen at 8 x 6 and 8 x 12 on these profiles).
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        for (const auto& values : {synthetic::load_like(120, seed), synthetic::solar_like(120, seed),
                                   synthetic::wind_like(120, seed)}) {
            const auto frame = normalized_frame(values, 24);
            const auto original = unroll(frame);
            ConfigEvaluator centroid(frame, RepresentationMethod::centroid);
            ConfigEvaluator distribution(frame, RepresentationMethod::distribution);
            for (std::size_t periods : {2, 4, 8, 16}) {
                const auto dc_centroid =
                    duration_curve_rmse(original, centroid.aggregate(periods, 24).reconstruction);
                const auto dc_distribution =
                    duration_curve_rmse(original, distribution.aggregate(periods, 24).reconstruction);
                CHECK(dc_distribution[0] <= dc_centroid[0]);
            }
        }
    }
}

TEST_CASE("report bookkeeping") {
    const auto frame = normalized_frame(synthetic::random_matrix(8760, 1, 12), 24);
    ConfigEvaluator evaluator(frame, RepresentationMethod::centroid);
    const auto result = evaluator.aggregate(8, 8);
    const auto report = make_report(unroll(frame), result.reconstruction, result.segmented.total_steps());
    CHECK(report.total_steps == 64);
    CHECK(report.reduction_ratio == doctest::Approx(1.0 - 64.0 / 8760.0));
    CHECK(report.reduction_ratio > 0.99);
    CHECK(report.rmse_tot >= 0.0);
    CHECK(report.rmse_per_attribute.size() == 1);
    CHECK(report.duration_rmse_per_attribute[0] <= report.rmse_per_attribute[0]);
}
