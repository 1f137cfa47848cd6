#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inconlog {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula, theory file or ATMS file.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A theory that fails validation was handed to an operation requiring a strict partial order.
class InvalidTheory : public Error {
public:
    using Error::Error;
};

/// A configurable enumeration cap (atoms, linear extensions, MUS budget, AF size) was hit.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition (unknown id, goal not believed, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace inconlog
