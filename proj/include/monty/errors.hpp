#pragma once

#include <stdexcept>
#include <string>

namespace monty {

// Base for every rejected input or broken precondition. The CLI maps this
// family to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Door count below the minimum of three.
struct InvalidSizeError : ValidationError {
  using ValidationError::ValidationError;
};

// Door label outside 0..n-1.
struct InvalidDoorError : ValidationError {
  using ValidationError::ValidationError;
};

// Arguments built for different door counts.
struct DimensionError : ValidationError {
  using ValidationError::ValidationError;
};

// Requested enumeration exceeds the configured cap.
struct CapacityError : ValidationError {
  using ValidationError::ValidationError;
};

// Strategy or state not present in the table it was looked up in.
struct LookupError : ValidationError {
  using ValidationError::ValidationError;
};

// An exhaustive verification that provably cannot fail did fail. This is
// always an implementation bug, never bad input; the CLI maps it to exit
// code 2.
struct TheoremViolationError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace monty
