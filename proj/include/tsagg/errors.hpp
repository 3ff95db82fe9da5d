#pragma once

#include <stdexcept>
#include <string>

namespace tsagg {

/// Malformed or invalid input data (bad CSV, NaN entries, shape mismatch).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (counts out of range, unknown method names).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace tsagg
