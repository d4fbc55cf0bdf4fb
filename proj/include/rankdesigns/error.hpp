#pragma once

#include <stdexcept>
#include <string>

namespace rankdesigns {

/// A mathematical negative: an inconsistent system, a failed hypothesis, a
/// block family that is not a design.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input; the message names the offending field.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations of the same quantity disagree.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rankdesigns
