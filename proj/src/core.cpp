#include "tsagg/core.hpp"

#include "tsagg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tsagg {

std::string_view to_string(NormMethod method) {
    switch (method) {
    case NormMethod::minmax:
        return "minmax";
    case NormMethod::znorm:
        return "znorm";
    }
    return "unknown";
}

NormMethod parse_norm_method(std::string_view name) {
    if (name == "minmax") {
        return NormMethod::minmax;
    }
    if (name == "znorm") {
        return NormMethod::znorm;
    }
    throw ConfigError("unknown normalization method '" + std::string(name) +
                      "' (expected minmax or znorm)");
}

TimeSeriesSet validate_and_build(Matrix values, std::vector<std::string> names,
                                 double resolution_hours,
                                 std::optional<std::string> origin_timestamp) {
    if (values.rows() == 0) {
        throw DataError("time series has no time steps");
    }
    if (values.cols() == 0) {
        throw DataError("time series has no attributes");
    }
    if (names.size() != values.cols()) {
        throw DataError("got " + std::to_string(names.size()) + " attribute names for " +
                        std::to_string(values.cols()) + " columns");
    }
    if (!(resolution_hours > 0.0) || !std::isfinite(resolution_hours)) {
        throw DataError("resolution must be a positive number of hours");
    }
    std::set<std::string> seen;
    for (const auto& name : names) {
        if (!seen.insert(name).second) {
            throw DataError("duplicate attribute name '" + name + "'");
        }
    }
    for (std::size_t r = 0; r < values.rows(); ++r) {
        for (std::size_t c = 0; c < values.cols(); ++c) {
            if (!std::isfinite(values(r, c))) {
                throw DataError("non-finite value at row " + std::to_string(r) + ", column " +
                                std::to_string(c) + " ('" + names[c] + "')");
            }
        }
    }
    return TimeSeriesSet{std::move(names), std::move(values), resolution_hours,
                         std::move(origin_timestamp)};
}

Normalized normalize(const TimeSeriesSet& ts, NormMethod method) {
    const std::size_t n = ts.n_steps();
    const std::size_t n_attr = ts.n_attributes();
    NormParams params{method, std::vector<double>(n_attr), std::vector<double>(n_attr)};

    for (std::size_t a = 0; a < n_attr; ++a) {
        double lo = ts.values(0, a);
        double hi = lo;
        double sum = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            lo = std::min(lo, ts.values(t, a));
            hi = std::max(hi, ts.values(t, a));
            sum += ts.values(t, a);
        }
        if (lo == hi) {
            params.offset[a] = lo;
            params.scale[a] = 1.0;
            continue;
        }
        if (method == NormMethod::minmax) {
            params.offset[a] = lo;
            params.scale[a] = hi - lo;
        } else {
            const double mean = sum / static_cast<double>(n);
            double ss = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                const double d = ts.values(t, a) - mean;
                ss += d * d;
            }
            // lo != hi implies n >= 2
            params.offset[a] = mean;
            params.scale[a] = std::sqrt(ss / static_cast<double>(n - 1));
        }
    }
    return Normalized{apply_normalization(ts.values, params), std::move(params)};
}

Matrix apply_normalization(const Matrix& values, const NormParams& params) {
    if (values.cols() != params.n_attributes()) {
        throw DataError("normalization expects " + std::to_string(params.n_attributes()) +
                        " attributes, got " + std::to_string(values.cols()));
    }
    Matrix out(values.rows(), values.cols());
    for (std::size_t t = 0; t < values.rows(); ++t) {
        for (std::size_t a = 0; a < values.cols(); ++a) {
            out(t, a) = (values(t, a) - params.offset[a]) / params.scale[a];
        }
    }
    return out;
}

Matrix denormalize(const Matrix& values, const NormParams& params) {
    if (values.cols() != params.n_attributes()) {
        throw DataError("denormalize expects " + std::to_string(params.n_attributes()) +
                        " attributes, got " + std::to_string(values.cols()));
    }
    Matrix out(values.rows(), values.cols());
    for (std::size_t t = 0; t < values.rows(); ++t) {
        for (std::size_t a = 0; a < values.cols(); ++a) {
            out(t, a) = values(t, a) * params.scale[a] + params.offset[a];
        }
    }
    return out;
}

PeriodFrame to_periods(const Matrix& normalized, const NormParams& params,
                       std::size_t steps_per_period, bool drop_trailing) {
    if (steps_per_period == 0) {
        throw ConfigError("period length must be positive");
    }
    if (normalized.cols() != params.n_attributes()) {
        throw DataError("normalization parameters do not match the attribute count");
    }
    const std::size_t n_steps = normalized.rows();
    const std::size_t remainder = n_steps % steps_per_period;
    if (remainder != 0 && !drop_trailing) {
        throw ConfigError(std::to_string(n_steps) + " time steps are not a multiple of period length " +
                          std::to_string(steps_per_period) + " (remainder " +
                          std::to_string(remainder) + "); pass the trailing-drop option to discard them");
    }
    const std::size_t n_periods = n_steps / steps_per_period;
    if (n_periods == 0) {
        throw ConfigError("period length " + std::to_string(steps_per_period) +
                          " exceeds the " + std::to_string(n_steps) + " available time steps");
    }
    const std::size_t n_attr = normalized.cols();

    PeriodFrame frame;
    frame.n_periods = n_periods;
    frame.steps_per_period = steps_per_period;
    frame.n_attributes = n_attr;
    frame.norm_params = params;
    frame.dropped_steps = remainder;
    frame.rows = Matrix(n_periods, steps_per_period * n_attr);
    for (std::size_t p = 0; p < n_periods; ++p) {
        for (std::size_t t = 0; t < steps_per_period; ++t) {
            for (std::size_t a = 0; a < n_attr; ++a) {
                frame.rows(p, t * n_attr + a) = normalized(p * steps_per_period + t, a);
            }
        }
    }
    return frame;
}

Matrix unroll(const PeriodFrame& frame) {
    // The row-major storage of frame.rows is exactly the unrolled order.
    return Matrix(frame.n_steps(), frame.n_attributes, frame.rows.data());
}

} // namespace tsagg
