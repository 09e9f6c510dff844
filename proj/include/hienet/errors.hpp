#pragma once

#include <stdexcept>

namespace hienet {

// Input text could not be parsed (bad frame, unknown element, bad token).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dataset-level violation: missing energies, insufficient molecules, ...
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor shape or layout mismatch.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values encountered during evaluation or training.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem or serialization failure.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hienet
