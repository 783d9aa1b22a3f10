#pragma once

#include <stdexcept>
#include <string>

namespace gl2dist {

/// A mathematical precondition failed (non-square expected, wrong lattice type, ...).
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fewer than the minimum number of significant p-adic digits survived an operation.
class PrecisionUnderflow : public MathError {
public:
    using MathError::MathError;
};

/// An exact computation was requested outside the regime where it is available.
class RegimeRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed field or character specification.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace gl2dist
