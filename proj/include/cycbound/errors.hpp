// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace cycbound {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct GcdError : Error {
    explicit GcdError(const std::string& msg) : Error(msg) {}
};

struct NotPrimeError : Error {
    explicit NotPrimeError(const std::string& msg) : Error(msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

// m > n in an inclusion query.
struct LengthError : Error {
    explicit LengthError(const std::string& msg) : Error(msg) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

struct EmptyPattern : Error {
    explicit EmptyPattern(const std::string& msg) : Error(msg) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

struct ParamError : Error {
    explicit ParamError(const std::string& msg) : Error(msg) {}
};

struct NoNonzero : Error {
    explicit NoNonzero(const std::string& msg) : Error(msg) {}
};

struct NotFound : Error {
    explicit NotFound(const std::string& msg) : Error(msg) {}
};

struct CoefficientNotInBaseField : Error {
    explicit CoefficientNotInBaseField(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace cycbound
