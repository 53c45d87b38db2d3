#pragma once

#include <stdexcept>
#include <string>

namespace gda {

// Base for every error this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable or malformed input files / streams.
struct FormatError : Error {
    using Error::Error;
};

// A documented operation precondition was violated (bad spec string,
// cap or work budget exceeded, mismatched dimensions, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// tau is not an antiautomorphism of order dividing 2.  Kept distinct from
// "system unsolvable": both directions of the existence theorem matter.
struct TauShapeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A (sigma, tau, mu) triple fails an involution invariant.
struct CompatibilityError : Error {
    using Error::Error;
};

}  // namespace gda
