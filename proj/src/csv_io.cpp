#include "tsagg/csv_io.hpp"

#include "tsagg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <string_view>
#include <vector>

namespace tsagg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

bool iequals(std::string_view a, std::string_view b) {
    return std::ranges::equal(a, b, [](char x, char y) {
        return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
    });
}

double parse_number(std::string_view field, std::size_t line_no, std::size_t column) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last) {
        throw DataError("line " + std::to_string(line_no) + ", column " + std::to_string(column + 1) +
                        ": '" + std::string(field) + "' is not a number");
    }
    return value;
}

} // namespace

TimeSeriesSet read_time_series_csv(std::istream& in, double resolution_hours) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw DataError("line 1: missing header row");
    }
    ++line_no;
    if (line.starts_with("\xEF\xBB\xBF")) {
        line.erase(0, 3);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    auto header = split_fields(line);
    const bool has_timestamp = !header.empty() && iequals(header.front(), "timestamp");
    const std::size_t first_value_col = has_timestamp ? 1 : 0;
    std::vector<std::string> names;
    for (std::size_t c = first_value_col; c < header.size(); ++c) {
        if (header[c].empty()) {
            throw DataError("line 1: empty attribute name in column " + std::to_string(c + 1));
        }
        names.emplace_back(header[c]);
    }
    if (names.empty()) {
        throw DataError("line 1: header names no attribute columns");
    }

    std::vector<double> values;
    std::optional<std::string> origin;
    std::size_t n_rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        }
        if (has_timestamp && !origin) {
            origin = std::string(fields.front());
        }
        for (std::size_t c = first_value_col; c < fields.size(); ++c) {
            values.push_back(parse_number(fields[c], line_no, c));
        }
        ++n_rows;
    }
    if (n_rows == 0) {
        throw DataError("line " + std::to_string(line_no + 1) + ": no data rows after the header");
    }
    const std::size_t n_cols = names.size();
    return validate_and_build(Matrix(n_rows, n_cols, std::move(values)), std::move(names),
                              resolution_hours, std::move(origin));
}

TimeSeriesSet read_time_series_csv(const std::filesystem::path& path, double resolution_hours) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "'");
    }
    return read_time_series_csv(in, resolution_hours);
}

std::string format_number(double value) {
    char buffer[32];
    const int n = std::snprintf(buffer, sizeof buffer, "%.12g", value);
    std::string out(buffer, static_cast<std::size_t>(n));
    if (out == "-0") {
        out = "0";
    }
    return out;
}

double round_to_output(double value) {
    const std::string text = format_number(value);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw DataError("cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw DataError("failed writing '" + path.string() + "'");
    }
}

} // namespace tsagg
