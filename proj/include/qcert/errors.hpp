#pragma once

#include <stdexcept>
#include <string>

namespace qcert {

// Base type for every failure this library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed values: ring mismatches, bad term lists, invalid factor shapes.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Constant term is not a unit in the coefficient ring.
class InversionError : public Error {
public:
    using Error::Error;
};

// A documented operation precondition was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A theorem-family parameter tuple failed its range or integrality constraints.
class InstantiationError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// The requested work exceeds the configured series-order budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace qcert
