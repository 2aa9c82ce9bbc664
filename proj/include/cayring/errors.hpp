#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayring {

// Invalid input or violated precondition (bad parameters, non-unital ring
// where unity is required, cap exceeded, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax or validation error in the ring/element DSL. Carries the byte
// offset into the input at which the problem was detected.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Two redundant computations that must agree did not. This signals a bug in
// the library (or a genuinely inconsistent input), never a user error.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace cayring
