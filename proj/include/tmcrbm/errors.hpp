#pragma once

#include <stdexcept>
#include <string>

namespace tmcrbm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed files, inconsistent dimensions, invalid options.
struct ConfigError : Error {
    using Error::Error;
};

/// Numerical breakdown at runtime (NaN/Inf parameters, degenerate scales).
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace tmcrbm
