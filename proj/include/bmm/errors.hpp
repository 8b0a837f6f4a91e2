#pragma once

#include <stdexcept>
#include <string>

namespace bmm {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or malformed input file (CLI exit code 2).
struct ConfigInvalid : Error {
  using Error::Error;
};

/// Numerical failures (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};

struct PerturbationTooLarge : NumericalError { using NumericalError::NumericalError; };
struct ProjectionDiverged : NumericalError { using NumericalError::NumericalError; };
struct ShootingDiverged : NumericalError { using NumericalError::NumericalError; };
struct StepSizeUnderflow : NumericalError { using NumericalError::NumericalError; };
struct PreconditionViolated : NumericalError { using NumericalError::NumericalError; };
struct LipschitzExceeded : NumericalError { using NumericalError::NumericalError; };
struct SegmentTooLong : NumericalError { using NumericalError::NumericalError; };
struct GridMismatch : NumericalError { using NumericalError::NumericalError; };
struct EndpointNotZero : NumericalError { using NumericalError::NumericalError; };
struct SamplingExhausted : NumericalError { using NumericalError::NumericalError; };
struct DegenerateFit : NumericalError { using NumericalError::NumericalError; };
struct DegreeAmbiguous : NumericalError { using NumericalError::NumericalError; };
struct MissingTrace : ConfigInvalid { using ConfigInvalid::ConfigInvalid; };

/// Iteration budget exhausted without meeting the requested tolerance
/// (CLI exit code 4).
struct MaxIterExceeded : Error {
  using Error::Error;
};

}  // namespace bmm
