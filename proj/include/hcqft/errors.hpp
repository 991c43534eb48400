#pragma once

#include <stdexcept>
#include <string>

namespace hcqft {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ring element with a zero divisor among its idempotent components.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// k^2 + M^2 < 0: the momentum lies below the infrared cutoff.
class ImaginaryFrequency : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// The regulator extrapolation failed its Cauchy test.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

// The pair-coherent vacuum axioms do not fix this expectation value.
class UndeterminedByAxioms : public Error {
 public:
  using Error::Error;
};

class PoleAtZeroMomentum : public Error {
 public:
  using Error::Error;
};

class TruncationOrderTooLarge : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcqft
