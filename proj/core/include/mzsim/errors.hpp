#pragma once

#include <stdexcept>
#include <string>

namespace mzsim {

/// Bad argument: wrong dimension, out-of-range parameter, invariant violation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation has no pulse-level realization for this spin system.
class CannotRealize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spectral readout produced line pairs that disagree on the shared coefficient.
class InconsistentReadout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Visibility of a curve whose max + min vanishes.
class UndefinedVisibility : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal cross-check of a simulated pipeline failed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mzsim
