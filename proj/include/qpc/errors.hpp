#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpc {

/// Base class of every recoverable error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class InvalidMap : public Error {
public:
    using Error::Error;
};

class DenominatorTooLarge : public Error {
public:
    using Error::Error;
};

class NotPseudoIntegral : public Error {
public:
    using Error::Error;
};

class OriginNotInterior : public Error {
public:
    using Error::Error;
};

class NotLattice : public Error {
public:
    using Error::Error;
};

class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class SchemaMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when a search exceeds its EnumerationBudget and the caller asked
/// for a complete answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `offset` is a byte offset into the parsed string,
/// `line` is 1-based when the error comes from a file (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what + " (offset " + std::to_string(offset) + ")"
                     : what + " (offset " + std::to_string(offset) + ")"),
          offset_(offset),
          line_(line) {}

    std::size_t offset() const noexcept { return offset_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t offset_;
    std::size_t line_;
};

class RowInvariantViolated : public Error {
public:
    RowInvariantViolated(std::size_t row, const std::string& what)
        : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

}  // namespace qpc
