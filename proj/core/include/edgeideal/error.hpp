#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgeideal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A precondition on the mathematical input was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input is too large for the configured guards.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace edgeideal
