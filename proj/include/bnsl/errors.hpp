#pragma once

#include <stdexcept>
#include <string>

namespace bnsl {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input data could not be parsed (ragged rows, bad tokens, empty input).
struct ParseError : Error {
    using Error::Error;
};

/// Problem size exceeds a hard limit (n > 64, oracle instance too large).
struct CapacityError : Error {
    using Error::Error;
};

/// File could not be opened or read.
struct IoError : Error {
    using Error::Error;
};

/// Parent-graph file or structure failed validation.
struct PgraphFormatError : Error {
    using Error::Error;
};

} // namespace bnsl
