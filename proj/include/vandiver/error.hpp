#pragma once

#include <stdexcept>
#include <string>

namespace vandiver {

/// Bad caller input: non-prime modulus, out-of-range exponent, mismatched rings.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap (log-table memory, big-integer bit budget) was hit.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An arithmetic sanity check failed. Signals a bug, never bad data.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Reading or writing a cache / catalog file failed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vandiver
