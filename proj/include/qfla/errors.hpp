#pragma once

#include <stdexcept>
#include <string>

namespace qfla {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape or dimension mismatch between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A size guard was exceeded (symbolic determinants, etc.).
class GuardError : public Error {
public:
    using Error::Error;
};

/// An operation's precondition does not hold (e.g. CYBE violated,
/// form is not a 2-cocycle).  The message names the offending entry.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// build_double received a cobracket that does not define a Lie bialgebra;
/// carries the first Jacobi (or pairing) failure in the message.
class InvalidBialgebraError : public Error {
public:
    using Error::Error;
};

/// Workspace syntax or reference error with source position.
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column, std::string lexeme)
        : Error(format(message, line, column, lexeme)),
          line_(line),
          column_(column),
          lexeme_(std::move(lexeme)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& lexeme() const { return lexeme_; }

private:
    static std::string format(const std::string& message, int line, int column,
                              const std::string& lexeme) {
        std::string s = "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message;
        if (!lexeme.empty()) s += " (at '" + lexeme + "')";
        return s;
    }

    int line_;
    int column_;
    std::string lexeme_;
};

} // namespace qfla
