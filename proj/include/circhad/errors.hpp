#pragma once

#include <stdexcept>
#include <string>

namespace circhad {

// Invalid input values (empty rows, odd lengths, malformed text) are reported
// with std::invalid_argument. The types below cover the remaining failure
// classes.

/// A documented precondition of an operation does not hold for its input.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rows 1 and 2 of a rank-2 circulant are dependent, so they cannot serve as
/// a basis for expressing row 3.
class DependentBasis : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested size exceeds a hard cap (enumeration would be infeasible).
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A checked mathematical identity failed. Never expected; raised so that a
/// counterexample cannot go unnoticed.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace circhad
