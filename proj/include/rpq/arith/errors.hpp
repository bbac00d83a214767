#pragma once

#include <stdexcept>
#include <string>

namespace rpq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the documented domain (non-prime modulus, mixed primes, n > m, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A series was asked to converge outside its disk of convergence.
class ConvergenceDomainError : public Error {
 public:
  using Error::Error;
};

/// A deformed number, structure function or denominator vanished where it must not.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Division by zero (p-adic zero, zero power-basis factor, ...).
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Series division by a series whose constant term vanishes.
class PoleAtOrigin : public Error {
 public:
  using Error::Error;
};

/// Rational function evaluated at one of its poles.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Jackson quadrature requested in a regime where the node ratio is not below one.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// No certificate was supplied for a limit that cannot be checked automatically.
class ConvergenceUnverified : public Error {
 public:
  using Error::Error;
};

/// A p-adic limit failed to stabilize inside the level budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace rpq
