#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tusi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed equation text. `position` is a 0-based offset into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;
};

// API misuse: wrong canonical form for an operation, mismatched radicands,
// inconsistent inputs. A caller bug, not a property of the equation.
struct UsageError : Error {
    using Error::Error;
};

// Equation arrangement outside the supported canonical-form catalogue.
struct UnsupportedFormError : UsageError {
    using UsageError::UsageError;
};

// Mathematical domain violation (square root of a negative, etc.).
struct DomainError : Error {
    using Error::Error;
};

// The target value lies outside the polynomial's range on the bracket.
struct NoRootError : Error {
    using Error::Error;
};

// The target function is nonpositive on all of x > 0, so no positive c is
// attainable. Signals an a-priori impossible instance, not a caller bug.
struct PositivityImpossible : Error {
    using Error::Error;
};

// Broken internal invariant or failed certification. Always a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace tusi
