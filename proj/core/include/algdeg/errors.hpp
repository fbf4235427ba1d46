#pragma once

#include <stdexcept>
#include <string>

namespace algdeg {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("denominator is zero") {}
};

class NonInvertibleDenominator : public Error {
public:
    explicit NonInvertibleDenominator(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class DimensionTooSmall : public Error {
public:
    explicit DimensionTooSmall(const std::string& what) : Error(what) {}
};

class DimensionTooLarge : public Error {
public:
    explicit DimensionTooLarge(const std::string& what) : Error(what) {}
};

class FieldTooSmall : public Error {
public:
    explicit FieldTooSmall(const std::string& what) : Error(what) {}
};

class EnumerationTooLarge : public Error {
public:
    explicit EnumerationTooLarge(const std::string& what) : Error(what) {}
};

class NotAMonomial : public Error {
public:
    explicit NotAMonomial(const std::string& what) : Error(what) {}
};

class NotAnIdeal : public Error {
public:
    explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

class BadIndices : public Error {
public:
    explicit BadIndices(const std::string& what) : Error(what) {}
};

class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

class InvalidField : public Error {
public:
    explicit InvalidField(const std::string& what) : Error(what) {}
};

/// Malformed input (JSON, scalar strings, CLI files).  Messages name the
/// offending field.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A certificate failed its own re-verification.  Indicates a bug, not a
/// caller mistake; never expected on valid inputs.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace algdeg
