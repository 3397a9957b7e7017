#pragma once

#include <stdexcept>
#include <string>

namespace pitchforge {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument values (out-of-range index, non-positive spacing, ...).
struct DomainError : Error {
  using Error::Error;
};

// Tensor / buffer dimension mismatches.
struct ShapeError : Error {
  using Error::Error;
};

// Degenerate numeric configurations (singular homography, camera in the
// ground plane, ill-conditioned DLT, point at infinity).
struct SingularError : Error {
  using Error::Error;
};

// Non-finite values encountered during optimization.
struct DivergenceError : Error {
  using Error::Error;
};

// Dataset / file corruption or version mismatch.
struct IntegrityError : Error {
  using Error::Error;
};

// Plain filesystem trouble.
struct IoError : Error {
  using Error::Error;
};

// Sampler could not satisfy its constraints within the attempt budget.
struct UnsatisfiableRangeError : Error {
  using Error::Error;
};

} // namespace pitchforge
