#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace daytrade {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (bad row, bad number, bad date). Carries the
/// 1-based line number of the offending input line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a domain invariant (e.g. low > high).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Invalid argument to an operation (empty series, start > end, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Store file is corrupt or carries an unsupported format/version.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// The leveraged per-day loss factor is nonpositive: a single losing day
/// wipes out (or exceeds) equity, so the compounding model breaks down.
class RuinError : public Error {
public:
    using Error::Error;
};

} // namespace daytrade
