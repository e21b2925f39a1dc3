#pragma once

#include <stdexcept>
#include <string>

namespace hermite {

/// Base class of every domain error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two points that must be distinct coincide (within the 1e-14 tolerance).
class CoincidentPoints : public Error {
public:
  using Error::Error;
};

/// An angle configuration makes a denominator collapse (e.g. the tangent
/// deviations sum to a full turn).
class DegenerateAngles : public Error {
public:
  using Error::Error;
};

/// An ordered pair of Hermite elements cannot be averaged: the points
/// coincide or the direction triple {v0, v1, u} is collinear with a reversal.
/// `index` locates the offending pair inside a sequence; `round` locates the
/// smoothing round for multi-round schemes.  Both are -1 when not applicable.
class Inadmissible : public Error {
public:
  explicit Inadmissible(const std::string& what, long index = -1, int round = -1)
      : Error(what), index(index), round(round) {}
  long index;
  int round;
};

/// A curve derivative (or a vector that must be normalized) has near-zero
/// magnitude, so no unit tangent can be produced.
class VanishingTangent : public Error {
public:
  using Error::Error;
};

/// Two unit vectors are (numerically) antipodal; the connecting geodesic is
/// not unique.
class AntipodalVectors : public Error {
public:
  using Error::Error;
};

/// A parameter lies outside the domain it indexes.
class OutOfRange : public Error {
public:
  using Error::Error;
};

/// The expression under a square root in the averaged-angle closed forms is
/// not positive; the configuration is outside the usable domain.
class DegenerateDenominator : public Error {
public:
  using Error::Error;
};

/// The contraction quotient is requested at the origin, where it is 0/0.
class UndefinedAtOrigin : public Error {
public:
  using Error::Error;
};

/// A functional (graph-of-a-function) curve was required but the input is
/// not functional.
class NonFunctionalInput : public Error {
public:
  using Error::Error;
};

/// An invalid configuration value (flag, field, or argument).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A file or stream could not be read or parsed.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace hermite
