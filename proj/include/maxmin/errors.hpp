#pragma once

#include <stdexcept>
#include <string>

namespace maxmin {

/// A scalar fell outside the semiring bounds or a T-norm's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on input that violates its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A grid witness search for a non-Min T-norm found nothing at the configured
/// resolution. Existence may still hold off-grid.
class ResolutionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force oracle was asked to enumerate beyond its size guard.
class SizeGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A search that is exact by construction came back empty. Indicates a bug,
/// never a property of the input.
class SoundnessViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

void require_same_dimension(std::size_t a, std::size_t b, const char* what);

}  // namespace maxmin
