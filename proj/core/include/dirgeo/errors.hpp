#pragma once

#include <stdexcept>
#include <string>

namespace dirgeo {

/// Precondition or argument violation (bad sizes, duplicate points, zero
/// vectors, malformed files, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A candidate hyperplane failed an exact genericity check; the caller may
/// retry with another candidate.
struct NonGenericHyperplane : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The bounded retry budget for a randomized construction ran out.
struct GenericityExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dirgeo
