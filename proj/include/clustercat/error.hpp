#pragma once

#include <stdexcept>
#include <string>

namespace clustercat {

/// Malformed or unsupported input: bad vertex, wrong quiver class, parse errors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant the library relies on did not hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace clustercat
