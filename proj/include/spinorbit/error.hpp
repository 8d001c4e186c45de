// Exception hierarchy shared by all spinorbit modules.
#pragma once

#include <stdexcept>
#include <string>

namespace spinorbit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An iterative method hit its iteration cap or stagnated.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A hypothesis required by an operation does not hold (e.g. range condition).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input data could not be parsed or validated.
class ParseError : public Error {
public:
    ParseError(const std::string &what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace spinorbit
