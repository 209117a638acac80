#pragma once

#include <stdexcept>
#include <string>

namespace subsetgrad {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NonFiniteData : Error {
    using Error::Error;
};
struct NumericalFailure : Error {
    using Error::Error;
};
struct EmptyRegion : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct InsufficientData : Error {
    using Error::Error;
};
struct Diverged : Error {
    using Error::Error;
};
struct ZeroNoise : Error {
    using Error::Error;
};
struct ZeroSignal : Error {
    using Error::Error;
};
struct EmptyList : Error {
    using Error::Error;
};
struct MissingTarget : Error {
    using Error::Error;
};

// Carries the 1-based location of the offending cell.
struct ParseError : Error {
    ParseError(const std::string& msg, long row, long col)
        : Error(msg + " (row " + std::to_string(row) + ", col " + std::to_string(col) + ")"),
          row(row),
          col(col) {}
    long row;
    long col;
};

} // namespace subsetgrad
