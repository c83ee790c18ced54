#pragma once

#include <stdexcept>
#include <string>

namespace quadprime {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument outside the domain contract (non-squarefree d, zero input, ...).
struct RejectedInput : Error {
    using Error::Error;
};

// Requested work exceeds a configured bound (sieve size, factorization bound,
// coordinate overflow, search window size).
struct CapacityError : Error {
    using Error::Error;
};

// Operation defined only for the other signature.
struct UnsupportedSignature : Error {
    using Error::Error;
};

// A convergent landed within working-precision distance of the target, so the
// target is indistinguishable from a small-height field element.
struct ExactHitError : Error {
    using Error::Error;
};

// Bad command line / config file.
struct UsageError : Error {
    using Error::Error;
};

} // namespace quadprime
