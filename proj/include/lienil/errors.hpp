#pragma once

#include <stdexcept>
#include <string>

namespace lienil {

/// Malformed or out-of-contract input (bad dimensions, singular matrix,
/// invalid type, broken Jacobi identity in a loaded file, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The lower central series stabilised at a nonzero subspace.
class NotNilpotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nilpotent algebra that is not the nilradical of a Borel subalgebra of
/// any simple Lie algebra within the supported rank bound.
class Unrecognized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must always hold was violated: a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lienil
