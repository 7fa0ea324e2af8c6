#pragma once

#include <stdexcept>

namespace cover {

// Base class for every error raised by this library, so callers can catch
// cover::Error without enumerating the specific failure modes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polygon input rejected: too few vertices, non-convex, zero area, or NaN/inf.
class InvalidPolygonError : public Error {
 public:
  using Error::Error;
};

// Half-plane requested from two coincident points; the bisector is undefined.
class DegenerateBisectorError : public Error {
 public:
  using Error::Error;
};

// Two generator sites closer than the merge tolerance.
class DuplicateSiteError : public Error {
 public:
  using Error::Error;
};

// A site (or query point that must lie in the domain) is outside the domain.
class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

// Fewer positive-weight candidates than requested picks.
class InsufficientCandidatesError : public Error {
 public:
  using Error::Error;
};

// A sampling distribution summed to zero where a positive mass was required.
class DegenerateDistributionError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds the enumeration guard of the brute-force optimizer.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

// Density field integrates to (numerically) zero over the domain.
class ZeroMassError : public Error {
 public:
  using Error::Error;
};

// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cover
