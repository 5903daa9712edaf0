#pragma once

#include <stdexcept>
#include <string>

namespace dpp {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad function argument (out-of-range index, invalid geometry, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Tensor/layer shape mismatch.
struct ShapeError : Error {
    using Error::Error;
};

// Malformed or inconsistent external data (files, annotations, checkpoints).
struct DataError : Error {
    using Error::Error;
};

// Invalid run configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Non-finite values where finite ones are required (diverged training etc).
struct NumericError : Error {
    using Error::Error;
};

}  // namespace dpp
