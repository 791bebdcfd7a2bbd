#pragma once

#include <stdexcept>
#include <string>

namespace strata {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is geometrically degenerate for the requested operation
/// (all points collinear, collinear triple passed to circumcircle, ...).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Too few points for the requested operation.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Two points with identical coordinates.
class DuplicatePoint : public Error {
public:
    DuplicatePoint(const std::string& what, std::size_t first, std::size_t second)
        : Error(what), first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// A parameter is outside its admissible domain (nonpositive gadget value, NaN coordinate).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An integer parameter is out of range (level index, gadget size).
class RangeError : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition does not hold (e.g. in_circle on a clockwise triple).
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Malformed point file or result document.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what), line_(line) {}

    /// 1-based line number, 0 when not applicable.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace strata
