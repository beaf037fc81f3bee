#ifndef BETAINV_ERRORS_HPP
#define BETAINV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betainv {

/// Syntax/semantic error while parsing polynomial text. `position` is the
/// byte offset into the input at which the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Invalid input data: bad ring, bad schema, failed declaration checks.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Branch parametrization image is not a single monomial in t.
class NotMonomialError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Branch parametrization exponents have gcd > 1.
class NotPrimitiveError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class RejectReason { NonzeroConstant, DimSigma, Slice };

inline const char* reject_tag(RejectReason r) {
  switch (r) {
    case RejectReason::NonzeroConstant: return "REJECT_NONZERO_CONSTANT";
    case RejectReason::DimSigma: return "REJECT_DIM_SIGMA";
    case RejectReason::Slice: return "REJECT_SLICE";
  }
  return "REJECT_UNKNOWN";
}

/// Input rejected by the admissibility checks (exit code 2 at the CLI).
class AdmissibilityError : public std::runtime_error {
 public:
  AdmissibilityError(RejectReason reason, const std::string& detail)
      : std::runtime_error(std::string(reject_tag(reason)) + ": " + detail),
        reason_(reason) {}
  RejectReason reason() const { return reason_; }

 private:
  RejectReason reason_;
};

/// The configurable degree guard was exceeded during a basis completion.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A composition g∘φ vanished identically where a finite intersection
/// order was required.
class NonProperError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Transversal sampling failed to certify a stable finite value.
class UnstableSamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that holds for correct inputs and a correct implementation
/// failed: two-path mismatch, negative Lê number, non-proper internal
/// intersection. Exit code 4 at the CLI.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ideal contains a unit, so the germ at the origin is empty.
class EmptyGermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer than two distinct (or admissible) candidate forms for an
/// invariance check. Exit code 2 at the CLI.
class TooFewFormsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace betainv

#endif
