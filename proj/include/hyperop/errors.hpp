#pragma once

#include <stdexcept>
#include <string>

namespace hyperop {

/// A documented precondition of an operation was violated by its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation hit a pole: a vanishing denominator, or a point on a branch cut.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two isolating intervals could not be separated within the refinement cap.
class IndistinguishableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace detail
}  // namespace hyperop
