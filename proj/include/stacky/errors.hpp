#ifndef STACKY_ERRORS_HPP
#define STACKY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stacky {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatch (non-square determinant input, ray-count mismatch, ...).
struct DimensionError : Error {
    using Error::Error;
};

// Linear system without a unique solution.
struct SingularityError : Error {
    using Error::Error;
};

// A mathematical precondition was violated (fan not complete, class of the
// wrong degree, nonsimplicial cone where a simplicial one is required, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// A requested object (cone, ray) is not part of the fan.
struct NotFoundError : Error {
    using Error::Error;
};

// Operation invoked on a fan that failed validation (or was never validated).
struct ValidationError : Error {
    using Error::Error;
};

// Malformed textual input (fan file, class expression, rational literal).
struct ParseError : Error {
    using Error::Error;
};

// Filesystem-level failure.
struct IoError : Error {
    using Error::Error;
};

} // namespace stacky

#endif
