#pragma once

#include <stdexcept>
#include <string>

namespace h2 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ad - bc vanishes (numerically) for a linear fractional map.
class DegenerateMapError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of a rational function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the documented domain (|mu| != 1, p = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A power series was requested for a map whose pole lies in the closed disk.
class NotExpandableError : public Error {
 public:
  using Error::Error;
};

/// Kernel-identity evaluation at a point of a singular set (e.g. a*w = c*).
class ExcludedPointError : public Error {
 public:
  using Error::Error;
};

/// More than 20% of the kernel grid fell into excluded sets.
class IllConditionedGridError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis (boundary fixed point, |b| = |c|) does not hold.
class HypothesisViolationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (complex literal, conjugation string, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace h2
