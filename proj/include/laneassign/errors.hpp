#pragma once

#include <stdexcept>
#include <string>

namespace laneassign {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polyline cannot be sampled: fewer than two points or non-monotonic y.
struct DegeneratePolylineError : Error {
    using Error::Error;
};

// IoU requested between lanes (or masks) with an empty union.
struct UndefinedIouError : Error {
    using Error::Error;
};

// Lanes built on different grids passed to a pairwise operation.
struct GridMismatchError : Error {
    using Error::Error;
};

// Text input violates a file grammar; carries the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Value parsed fine but is out of its allowed range.
struct ValidationError : Error {
    using Error::Error;
};

// Weights file has a wrong version string or inconsistent dimensions.
struct WeightsFormatError : Error {
    using Error::Error;
};

// Model input dimension does not match the feature vector.
struct ModelCompatError : Error {
    using Error::Error;
};

// Cross-file inconsistency in a dataset (e.g. predictions for unknown images).
struct DataError : Error {
    using Error::Error;
};

}  // namespace laneassign
