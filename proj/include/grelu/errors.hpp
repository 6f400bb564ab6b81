#pragma once

#include <stdexcept>
#include <string>

namespace grelu {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor/matrix dimension mismatch; message names the offending shapes.
struct ShapeError : Error {
    using Error::Error;
};

// Bad argument value (empty mask, out-of-range hyperparameter, ...).
struct ValueError : Error {
    using Error::Error;
};

// Malformed dataset file; message carries file name and line number.
struct ParseError : Error {
    using Error::Error;
};

// Invalid experiment configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Training diverged or a solver failed numerically.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace grelu
