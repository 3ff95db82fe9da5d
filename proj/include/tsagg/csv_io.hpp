#pragma once

#include "tsagg/core.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace tsagg {

/// Reads a time series CSV: a header row of attribute names, then one row per
/// time step. A leading column whose header is "timestamp" is skipped and its
/// first value kept as the origin timestamp. Errors carry the 1-based line.
TimeSeriesSet read_time_series_csv(std::istream& in, double resolution_hours = 1.0);
TimeSeriesSet read_time_series_csv(const std::filesystem::path& path,
                                   double resolution_hours = 1.0);

/// Number formatting used by every output file: 12 significant digits.
std::string format_number(double value);

/// Rounds to the value format_number would print.
double round_to_output(double value);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace tsagg
