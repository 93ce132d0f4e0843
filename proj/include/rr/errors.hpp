#pragma once

#include <stdexcept>
#include <string>

namespace rr {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed framing: bridge positions do not hold the expected symbols.
class FramingError : public Error {
public:
    using Error::Error;
};

// A forbidden window or reserved codeword appeared where the code guarantees none.
class ConstraintError : public Error {
public:
    using Error::Error;
};

// A decoded index or argument lies outside its permitted range.
class RangeError : public Error {
public:
    using Error::Error;
};

// Malformed file or stream contents.
class ParseError : public Error {
public:
    using Error::Error;
};

// An iterative numeric routine failed to converge within its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace rr
