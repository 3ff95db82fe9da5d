#pragma once

#include "tsagg/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tsagg {

/// Raw multi-attribute series: one row per time step, one column per attribute.
struct TimeSeriesSet {
    std::vector<std::string> attribute_names;
    Matrix values;
    double resolution_hours = 1.0;
    std::optional<std::string> origin_timestamp;

    std::size_t n_steps() const noexcept { return values.rows(); }
    std::size_t n_attributes() const noexcept { return values.cols(); }
};

enum class NormMethod { minmax, znorm };

std::string_view to_string(NormMethod method);
NormMethod parse_norm_method(std::string_view name);

/// Per-attribute affine map: normalized = (original - offset) / scale.
///
/// Constant attributes get offset = their value and scale = 1, so they map
/// to all zeros under either method.
struct NormParams {
    NormMethod method = NormMethod::minmax;
    std::vector<double> offset;
    std::vector<double> scale;

    std::size_t n_attributes() const noexcept { return offset.size(); }
};

/// Normalized data reshaped so that each period is one sample row.
///
/// Row layout is time-major, attribute-minor: entry (t, a) of period p is
/// stored at rows(p, t * n_attributes + a).
struct PeriodFrame {
    std::size_t n_periods = 0;
    std::size_t steps_per_period = 0;
    std::size_t n_attributes = 0;
    Matrix rows;
    NormParams norm_params;
    /// Trailing steps discarded because they did not fill a whole period.
    std::size_t dropped_steps = 0;

    std::size_t n_steps() const noexcept { return n_periods * steps_per_period; }
    double at(std::size_t period, std::size_t step, std::size_t attribute) const noexcept {
        return rows(period, step * n_attributes + attribute);
    }
};

/// Validates shape, finiteness and name uniqueness. Throws DataError naming
/// the offending row/column or attribute.
TimeSeriesSet validate_and_build(Matrix values, std::vector<std::string> names,
                                 double resolution_hours = 1.0,
                                 std::optional<std::string> origin_timestamp = std::nullopt);

struct Normalized {
    Matrix values;
    NormParams params;
};

/// minmax maps each non-constant attribute onto [0, 1]; znorm gives zero
/// mean and unit sample standard deviation (divisor n - 1).
Normalized normalize(const TimeSeriesSet& ts, NormMethod method);

/// Applies an existing set of parameters, e.g. to compare a second series in
/// the normalized space of the first.
Matrix apply_normalization(const Matrix& values, const NormParams& params);

Matrix denormalize(const Matrix& values, const NormParams& params);

/// Reshapes a normalized N_t x N_a matrix into periods. A horizon that is not
/// a multiple of steps_per_period is rejected unless drop_trailing is set.
PeriodFrame to_periods(const Matrix& normalized, const NormParams& params,
                       std::size_t steps_per_period, bool drop_trailing = false);

/// Inverse of to_periods: back to (n_periods * steps_per_period) x N_a.
Matrix unroll(const PeriodFrame& frame);

} // namespace tsagg
