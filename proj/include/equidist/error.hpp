#pragma once

#include <stdexcept>
#include <string>

namespace equidist {

/// Base of every error raised by the library. The CLI maps each subclass to
/// an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong lengths, symbols outside the alphabet, bad ranges.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The question asked has no answer for this input (e.g. a family without pairs).
class Underdetermined : public Error {
public:
    using Error::Error;
};

/// The operation is defined only for a specific alphabet size.
class UnsupportedAlphabet : public Error {
public:
    using Error::Error;
};

/// The input lies outside the regime an argument applies to.
class OutOfRegime : public Error {
public:
    using Error::Error;
};

/// Enumeration, size or time limits exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// A family was required to be equidistant and is not.
class NotEquidistant : public Error {
public:
    using Error::Error;
};

}  // namespace equidist
