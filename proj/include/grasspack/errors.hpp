#pragma once

#include <stdexcept>
#include <string>

namespace grasspack {

/// Raised when an argument violates a documented precondition (bad shape,
/// bad dimension, malformed file). The CLI maps it to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation produces non-finite or pathological values.
/// The CLI maps it to exit code 2.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grasspack
