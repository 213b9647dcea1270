#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ybset {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A map of X x X that is not a bijection (duplicate or missing image).
class NotBijectiveError : public Error {
public:
    using Error::Error;
};

/// An index outside [0, n).
class BadIndexError : public Error {
public:
    using Error::Error;
};

/// An image sequence that is not a permutation.
class BadPermutationError : public Error {
public:
    using Error::Error;
};

/// Operation requires r(x,y) = (sigma_x(y), x), i.e. all gamma_y = id.
class NotSdError : public Error {
public:
    using Error::Error;
};

/// Tuple-space size exceeds the configured element budget.
/// `required` carries the number of tuples the request would need.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& msg, std::uint64_t required)
        : Error(msg), required(required) {}
    std::uint64_t required;
};

/// Operation needs bijective sigma and gamma families.
class RequiresNonDegenerateError : public Error {
public:
    using Error::Error;
};

/// Operation needs the braid relation to hold.
class RequiresBraidedError : public Error {
public:
    using Error::Error;
};

/// A quotient map turned out to depend on the choice of representatives.
class IllDefinedError : public Error {
public:
    using Error::Error;
};

/// A configured size limit (canonicalization, census, iteration count) was exceeded.
class LimitExceededError : public Error {
public:
    using Error::Error;
};

/// Malformed input text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid text that does not match the solution-document schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace ybset
