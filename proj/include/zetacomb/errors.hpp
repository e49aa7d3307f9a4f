#pragma once

#include <stdexcept>
#include <string>

namespace zetacomb {

// Base class for all numeric-domain failures. The CLI maps these to exit
// code 3; usage errors stay with the argument parser (exit 2).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument within the guard radius (1e-8) of a pole.
struct PoleProximity : Error {
    using Error::Error;
};

// Argument outside the documented parameter domain.
struct DomainError : Error {
    using Error::Error;
};

// Least-squares design matrix condition number above 1e12.
struct IllConditioned : Error {
    using Error::Error;
};

// Fit residual above 1e-6 times the sample norm.
struct ResidualTooLarge : Error {
    using Error::Error;
};

// |g| underflowed; no slope can be extracted.
struct SignalTooSmall : Error {
    using Error::Error;
};

// More residue classes detected than the configured bound.
struct TooManyClasses : Error {
    using Error::Error;
};

// Recurrence roots off the unit circle, or the round-trip residual failed:
// the measure is not a finite combination of twisted combs.
struct NotFiniteCombination : Error {
    using Error::Error;
};

// Too few consecutive coefficients in the window for the detected rank.
struct InsufficientWindow : Error {
    using Error::Error;
};

// Contour refinement did not converge.
struct ContourFailure : Error {
    using Error::Error;
};

// Verification suite name not recognized.
struct UnknownSuite : Error {
    using Error::Error;
};

} // namespace zetacomb
