#pragma once

#include <stdexcept>
#include <string>

namespace vcmax {

/// Malformed text input (expressions, numbers, file formats).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Mismatched matrix/point/basis dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sample too small for the requested check.
class InsufficientSampleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// NaN/Inf entries, overflow, or otherwise unusable numeric input.
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace vcmax
