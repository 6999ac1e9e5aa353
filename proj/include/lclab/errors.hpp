#pragma once

#include <stdexcept>
#include <string>

namespace lclab {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EvenPrimeError : Error {
    EvenPrimeError() : Error("p = 2 is not allowed: 2 must be invertible in the coefficient ring") {}
};

struct NotPrimeError : Error {
    explicit NotPrimeError(const std::string& what) : Error(what) {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero field element") {}
};

struct ShapeMismatchError : Error {
    explicit ShapeMismatchError(const std::string& what) : Error(what) {}
};

struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& what) : Error(what) {}
};

struct StrandMismatchError : Error {
    explicit StrandMismatchError(const std::string& what) : Error(what) {}
};

/// Raised when sampling fails to hit an invertible element within the
/// configured number of draws. Either the subspace contains no invertible
/// element, or the caller was extremely unlucky; the caller decides.
struct NoInvertibleFoundError : Error {
    explicit NoInvertibleFoundError(const std::string& what) : Error(what) {}
};

/// Raised by the exact lift when an entry exceeds the promised degree bound,
/// which signals an undersized p or d, or an input outside the promised interval.
struct DegreeOverflowError : Error {
    explicit DegreeOverflowError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace lclab
