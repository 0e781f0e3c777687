#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlogic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula or input file. `position()` is a 0-based byte offset
/// into the text that was being parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at offset " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input that violates a scoping or typing rule
/// (unbound variable, shadowing, sort mismatch, ...).
class ScopeError : public Error {
public:
    using Error::Error;
};

/// A semantic precondition does not hold (empty trace set, alphabet mismatch, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

}  // namespace hyperlogic
