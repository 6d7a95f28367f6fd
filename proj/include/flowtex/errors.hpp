#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowtex {

// Malformed field file. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a data invariant (e.g. a NaN component).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The field carries no direction information anywhere (M_max = 0).
class DegenerateFieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The image has no positive tone (H = 0).
class DegenerateImageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace flowtex
