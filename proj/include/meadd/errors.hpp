#pragma once

#include <stdexcept>
#include <string>

namespace meadd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A 4x4 input has weight outside the excitation-number blocks {00},{01,10},{11}.
struct NotExcitationPreserving : Error {
    using Error::Error;
};

// Interleaved-decoupling families require an even number of gate repetitions.
struct OddDepth : Error {
    using Error::Error;
};

// A consecutive phase increment came too close to +-pi to unwrap reliably.
struct UnwrapAmbiguity : Error {
    using Error::Error;
};

// Measured odd-sector matrix has |det| below the usable floor (signal collapsed).
struct DegenerateMatrix : Error {
    using Error::Error;
};

// Probabilities are not a distribution within tolerance.
struct BadDistribution : Error {
    using Error::Error;
};

// Density matrix lost trace normalization or positivity beyond tolerance.
struct InvalidState : Error {
    using Error::Error;
};

// Bell-basis components too weak to fix the sign of the fitted rotation.
struct AmbiguousSign : Error {
    using Error::Error;
};

// Pulse integrator step produced norm drift beyond tolerance.
struct StepTooLarge : Error {
    using Error::Error;
};

// Configuration file is missing fields or has out-of-range values.
struct ConfigError : Error {
    using Error::Error;
};

// Unrecognized plot-data kind or preset name.
struct UnknownKind : Error {
    using Error::Error;
};

} // namespace meadd
