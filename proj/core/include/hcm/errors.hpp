#ifndef HCM_ERRORS_HPP
#define HCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcm {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

/// The algebra size n is outside the supported range for the operation.
struct UnsupportedN : Error {
    using Error::Error;
};

/// A matrix argument has nonzero entries on its outer boundary.
struct NotInteriorMatrix : Error {
    using Error::Error;
};

/// An operation whose formulas are only valid for commuting maps was
/// handed a map that fails the commuting check.
struct NotCommuting : Error {
    using Error::Error;
};

struct InvalidDecomposition : Error {
    using Error::Error;
};

struct WrongCoefficientCount : Error {
    using Error::Error;
};

/// Text input did not match one of the exact file grammars.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_number(line), message(msg) {}
    std::size_t line_number;
    std::string message;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace hcm

#endif
