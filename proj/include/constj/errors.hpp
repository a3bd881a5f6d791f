#pragma once

#include <stdexcept>
#include <string>

namespace constj {

/// Bad user input: malformed pattern, non-prime p, repeated roots, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal identity failed. Always a bug, never an input problem.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Point counts do not come from a curve (non-integral L coefficients).
class CountDataInconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// L_{C^(N)} is not divisible by the subcover L-polynomials.
class BranchCorrectionInconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough levels were counted to reconstruct an L-polynomial.
class MissingCounts : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace constj
