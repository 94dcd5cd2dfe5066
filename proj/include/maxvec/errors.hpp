/**
 * @file errors.hpp
 * @brief Exception types thrown by the maxvec library.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace maxvec {

/// Base class for all maxvec errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two vectors (or a vector and a set) disagree on dimension, or an
/// operation received a dimension it does not support.
struct DimensionError : Error {
    using Error::Error;
};

/// A value lies outside the domain of an operation (e.g. a non-positive
/// argument where a strictly positive one is required).
struct DomainError : Error {
    using Error::Error;
};

/// The reference-point set of the empty set was requested.
struct EmptySetError : Error {
    using Error::Error;
};

/// An enumeration would exceed its configured candidate budget.
struct BudgetError : Error {
    using Error::Error;
};

/// No bids remain after duplicate removal.
struct EmptyMarketError : Error {
    using Error::Error;
};

/// Only one bid remains after duplicate removal, so opponent sets are empty.
struct SingleAgentError : Error {
    using Error::Error;
};

/// A valuation vector was required but not supplied.
struct MissingValuationError : Error {
    using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

/// A coordinate that must be strictly positive is zero or negative.
struct NonPositiveError : Error {
    using Error::Error;
};

/// A textual input could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace maxvec
