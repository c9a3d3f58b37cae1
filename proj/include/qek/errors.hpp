#pragma once

#include <stdexcept>
#include <string>

namespace qek {

/// Malformed input file (carries a human-readable location in the message).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally inconsistent data (e.g. edge endpoint outside its graph).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Request exceeds what this implementation can handle (size limits etc.).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Geometric or optimization constraints cannot be satisfied.
struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical routine failed to reach its tolerance.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qek
