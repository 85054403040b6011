#pragma once

#include <stdexcept>
#include <string>

namespace complements {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (coefficient not in [0,1],
/// non-standard coefficient where one is required, and so on).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input: rationals, coefficient sets, JSON documents.
class ParseError : public Error {
public:
    using Error::Error;
};

/// -(K+D) is not nef: the boundary degree exceeds the anticanonical degree.
class NotNefError : public DomainError {
public:
    using DomainError::DomainError;
};

/// No complement was found for any index up to the search cap.
class CapExceededError : public Error {
public:
    CapExceededError(int cap)
        : Error("no complement up to cap " + std::to_string(cap)), cap_(cap) {}
    int cap() const noexcept { return cap_; }

private:
    int cap_;
};

/// A registry lookup for N_d hit a dimension without a known value.
class RegistryIncompleteError : public Error {
public:
    explicit RegistryIncompleteError(int dim)
        : Error("registry incomplete: N_" + std::to_string(dim) + " unknown"), dim_(dim) {}
    int missing_dimension() const noexcept { return dim_; }

private:
    int dim_;
};

}  // namespace complements
