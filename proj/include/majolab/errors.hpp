#pragma once

#include <stdexcept>
#include <string>

namespace majolab {

/// Bad arguments: shape mismatches, out-of-range parameters, malformed input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced non-finite values or failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested operation is not defined for this representation or boundary condition.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace majolab
