// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace softmatrix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A soft multiset description violates a structural invariant.
/// `label()` names the offending universe, parameter, element or choice.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::string label)
        : Error(what + ": '" + label + "'"), label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

/// Two operands do not share the universes, parameter spaces or block layout
/// an operation requires.
class StructureMismatch : public Error {
public:
    using Error::Error;
};

/// A document could not be parsed. Line and column are 1-based; zero when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what
                          : what + " (line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace softmatrix
