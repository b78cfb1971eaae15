#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqp {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t token_index, std::size_t offset)
        : InputError(message + " (token " + std::to_string(token_index + 1) + ", column " +
                     std::to_string(offset + 1) + ")"),
          token_index_(token_index),
          offset_(offset) {}

    std::size_t token_index() const { return token_index_; }
    std::size_t offset() const { return offset_; }

private:
    std::size_t token_index_;
    std::size_t offset_;
};

// The band selection algorithm needs a surface that is not a union of disks.
class UnlinkInput : public InputError {
public:
    using InputError::InputError;
};

class SelectionInvalid : public Error {
public:
    using Error::Error;
};

class RelocationLost : public Error {
public:
    using Error::Error;
};

// A computed post-condition failed. Always a bug in a construction, never bad input.
class OracleViolation : public Error {
public:
    using Error::Error;
};

}  // namespace sqp
