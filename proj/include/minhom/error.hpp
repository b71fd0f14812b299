#pragma once

#include <stdexcept>
#include <string>

namespace minhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A configured size guard or search budget was exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

class NotMultipartiteTournament : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string & message, std::size_t line) :
        Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line)
    {
    }

    auto line() const noexcept -> std::size_t { return line_; }

private:
    std::size_t line_;
};

class Overflow : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace minhom
