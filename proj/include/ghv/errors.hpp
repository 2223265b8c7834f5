#pragma once

#include <stdexcept>
#include <string>

namespace ghv {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by zero in an exact domain.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Evaluation at a pole of a rational function.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

/// Precondition violation on a public operation.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Text that does not conform to the scalar grammar.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace ghv
