#pragma once

#include <stdexcept>

namespace primeplet {

/// Bad operand (non-prime where a prime is required, malformed ranges, ...).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a documented resource policy (sieve limit, search box, ...).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The operation is well-formed but has no defined result for this input.
struct NotApplicableError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A proved law was violated at runtime; signals an implementation bug.
struct InvariantBreach : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace primeplet
