#pragma once

#include <stdexcept>
#include <string>

namespace evalkit {

// Input problems: bad shapes, unparseable files, invalid configuration,
// unmapped labels, out-of-domain arguments. CLI exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : ValidationError {
    using ValidationError::ValidationError;
};

// File-level parse failure; message carries the row/column position.
struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

struct ConfigError : ValidationError {
    using ValidationError::ValidationError;
};

// Numerical or degenerate-data problems: eigensolver non-convergence,
// zero-variance columns in the z-score track, all-entropy-one weight
// degeneracy. CLI exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : NumericalError {
    using NumericalError::NumericalError;
};

struct DegenerateDataError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace evalkit
