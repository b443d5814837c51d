#pragma once

#include <stdexcept>
#include <string>

namespace forman {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown cell id or vertex list.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Out-of-range or inconsistent parameter (alpha, side, radius, grid).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Point data that cannot produce the requested complex.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Operation not defined for the complex kind (e.g. cubical subdivision).
class UnsupportedKindError : public Error {
public:
    using Error::Error;
};

/// A sample that does not sit on the cubical lattice.
class SnapError : public Error {
public:
    using Error::Error;
};

/// Missing or malformed per-cell vector data.
class AssignmentError : public Error {
public:
    using Error::Error;
};

/// Zero-norm argument to a direction-only quantity.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace forman
