#pragma once

#include <stdexcept>
#include <string>

namespace qriccati {

// Base class for every failure the library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejected input: bad scenario field, parameter out of range, state that
// violates a precondition (unphysical width, mismatched representation tag,
// operator/state width mismatch, divergent integral, ...). The message names
// the offending field or quantity.
struct ValidationError : Error {
  using Error::Error;
};

// imag(c) fell to or below the collapse guard while propagating.
struct WidthCollapseError : Error {
  WidthCollapseError(const std::string& what, double when) : Error(what), t(when) {}
  double t;  // first offending time
};

// Step-doubling estimate exceeded the per-step tolerance.
struct AccuracyError : Error {
  AccuracyError(const std::string& what, double when, double est)
      : Error(what), t(when), estimate(est) {}
  double t;
  double estimate;  // scaled Richardson estimate at the failing step
};

// A linearized solution passed through zero (lambda = 0, or a Moebius
// family member through its pole).
struct SingularityError : Error {
  SingularityError(const std::string& what, double when) : Error(what), t(when) {}
  double t;
};

// Filesystem failure while reading a scenario or writing results.
struct IoError : Error {
  using Error::Error;
};

}  // namespace qriccati
