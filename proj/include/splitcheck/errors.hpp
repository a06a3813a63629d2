#pragma once

#include <stdexcept>
#include <string>

namespace splitcheck {

// Base for every failure raised by the library. Callers that only need to
// distinguish "our" errors from std ones catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// expm input too large to scale safely.
class OverflowGuard : public Error {
 public:
  using Error::Error;
};

// Second-order constraint solve produced a residual above the acceptance gate.
class ResidualTooLarge : public Error {
 public:
  using Error::Error;
};

// Duhamel representation requested for a triple violating the second-order condition.
class ConditionViolated : public Error {
 public:
  using Error::Error;
};

// Panel doubling hit the refinement cap without meeting the target tolerance.
class ToleranceNotReached : public Error {
 public:
  using Error::Error;
};

class UnboundReference : public Error {
 public:
  using Error::Error;
};

class NonCanonicalScheme : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class IllConditionedFit : public Error {
 public:
  using Error::Error;
};

class VanishingState : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace splitcheck
