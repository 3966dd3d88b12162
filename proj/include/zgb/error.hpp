#pragma once

#include <stdexcept>
#include <string>

namespace zgb {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation is undefined over a field coefficient ring (gcd-pairs,
// annihilators over QQ). Distinct type so callers can skip rather than die.
struct FieldRingError : Error {
    using Error::Error;
};

// Iteration cap exceeded (suspected non-termination).
struct CapExceeded : Error {
    using Error::Error;
};

// Cooperative deadline hit.
struct TimedOut : Error {
    using Error::Error;
};

}  // namespace zgb
