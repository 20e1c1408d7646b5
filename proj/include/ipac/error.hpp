#pragma once

#include <stdexcept>
#include <string>

namespace ipac {

// Base for everything thrown by the library. Subclasses mirror the
// failure categories used across modules so callers can discriminate.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/vector dimensions do not line up.
struct ShapeError : Error {
    using Error::Error;
};

// A value is outside the legal domain (bad label, bad cluster id, ...).
struct DomainError : Error {
    using Error::Error;
};

// An index is out of range.
struct BoundsError : Error {
    using Error::Error;
};

// Invalid configuration (empty input, too few patches, bad fractions, ...).
struct ConfigError : Error {
    using Error::Error;
};

// A persisted file is malformed (bad magic, missing key, bad dtype, ...).
struct FormatError : Error {
    using Error::Error;
};

// Underlying I/O failed (cannot open, truncated archive, CRC mismatch, ...).
struct IoError : Error {
    using Error::Error;
};

// An operation was called in a state it cannot handle (missing gradient, ...).
struct StateError : Error {
    using Error::Error;
};

// A computation produced NaN/Inf or otherwise left the representable range.
struct NumericError : Error {
    using Error::Error;
};

// A graph is too degenerate to classify (no messages to pool).
struct GraphError : Error {
    using Error::Error;
};

}  // namespace ipac
