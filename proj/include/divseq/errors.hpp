#pragma once

#include <stdexcept>
#include <string>

namespace divseq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was applied outside its mathematical domain (zero element,
/// mismatched rings, malformed polynomial text).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed request: bad arguments, empty lists, out-of-range indices.
class UsageError : public Error {
public:
    using Error::Error;
};

/// An invariant that the mathematics guarantees was violated. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace divseq
