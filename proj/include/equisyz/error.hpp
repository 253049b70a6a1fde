#pragma once

#include <stdexcept>
#include <string>

namespace equisyz {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad arrangement document, mismatched
// dimensions, violated preconditions).
class InputError : public Error {
public:
    using Error::Error;
};

// A configured size limit would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A computed object failed a consistency check (sign pattern of a linear
// resolution, non-character weight data, failed comparison).
class ValidationError : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

} // namespace equisyz
