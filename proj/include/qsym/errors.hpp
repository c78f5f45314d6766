#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsym {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Values live on different grading groups, or a matrix does not match a
/// group's rank.
struct SpecMismatchError : Error {
    using Error::Error;
};

/// Cyclotomic operands have incompatible orders and were not rescaled.
struct OrderMismatchError : Error {
    using Error::Error;
};

/// A parameter is outside its documented domain.
struct InvalidParameterError : Error {
    using Error::Error;
};

/// Exact integer arithmetic would overflow the machine representation.
/// Results are never silently truncated.
struct OverflowError : Error {
    using Error::Error;
};

/// Elements or generators from different algebra contexts were mixed.
struct ContextMismatchError : Error {
    using Error::Error;
};

/// An enumeration would exceed the configured cap and force was not set.
struct CapExceededError : Error {
    using Error::Error;
};

/// Input text could not be parsed. column is 1-based.
struct ParseError : Error {
    std::size_t column;
    ParseError(const std::string& msg, std::size_t col) : Error(msg), column(col) {}
};

}  // namespace qsym
