#ifndef GDS_ERRORS_HPP
#define GDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gds {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by complex division when the divisor has zero modulus.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Thrown when an operation mixes propositions or assignments from
/// different frames of discernment.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

/// Mass assigned to the empty set must be zero.
class EmptySetMass : public Error {
 public:
  using Error::Error;
};

/// A mass magnitude fell outside [0, 1].
class MagnitudeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The masses of an assignment do not sum to 1 within tolerance.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

/// Generalized combination is infeasible: |1 - K| below the
/// singularity threshold.
class ConflictSingularity : public Error {
 public:
  using Error::Error;
};

/// Classical combination is infeasible: conflict coefficient K = 1.
class TotalConflict : public Error {
 public:
  using Error::Error;
};

/// Sweep parameters (x, y) put a mass magnitude above 1.
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

/// Malformed evidence file (JSON syntax or schema violation).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gds

#endif  // GDS_ERRORS_HPP
