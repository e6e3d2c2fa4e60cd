#pragma once

#include <stdexcept>
#include <string>

namespace bellcong {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap would be exceeded (table size, prime power, index range).
struct ResourceLimitError : Error {
    using Error::Error;
};

// An exact division produced a remainder.  These divisions (k! into the Stirling
// sum, n! times an EGF coefficient) are correctness oracles: this firing means a bug.
struct InexactDivisionError : Error {
    using Error::Error;
};

struct ZeroInverseError : Error {
    using Error::Error;
};

struct ZeroInputError : Error {
    using Error::Error;
};

struct ModulusMismatchError : Error {
    using Error::Error;
};

// A verifier was invoked outside the hypothesis of the identity it checks.
struct HypothesisError : Error {
    using Error::Error;
};

struct NotPrimeError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct CacheFormatError : Error {
    using Error::Error;
};

}  // namespace bellcong
