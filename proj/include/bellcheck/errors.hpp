#pragma once

#include <stdexcept>
#include <string>

namespace bellcheck {

/// Caller supplied an argument that violates a documented precondition.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Two independent computations of the same quantity disagreed, or a
/// postcondition failed. Always indicates a bug, never bad input.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// An iterative routine exhausted its budget.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace bellcheck
