#pragma once

#include <stdexcept>
#include <string>

namespace arrowlab {

/// Raised when an argument is not an object/morphism of the category it is
/// used with, or when two morphisms are not composable.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an operation is called outside its stated precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a constructed witness fails its own correctness check. Seeing
/// one of these means a construction is wrong, not that the input was bad.
class PostconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arrowlab
