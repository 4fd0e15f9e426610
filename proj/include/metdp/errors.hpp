#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metdp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied a value outside the operation's domain (bad pixel, bad
/// threshold set, n out of range, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Interval [a, b] with a > b or b outside [0, L-1].
class IntervalError : public InputError {
public:
    using InputError::InputError;
};

class EmptyHistogramError : public InputError {
public:
    using InputError::InputError;
};

/// A configuration that cannot be honoured, e.g. an SSIM window larger than
/// the image.
class ConfigError : public InputError {
public:
    using InputError::InputError;
};

/// Malformed file content. `position()` is a byte offset for binary formats
/// and a 1-based line number for text formats.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// No partition of the histogram has a finite objective value.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Internal tables are inconsistent (e.g. a broken successor chain).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace metdp
