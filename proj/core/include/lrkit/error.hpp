#pragma once

#include <stdexcept>
#include <string>

namespace lrkit {

/// Integer overflow in exact arithmetic. Never silently wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Input violates an operation's precondition (shape, rank, balance...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hard-coded tables are internally inconsistent (overlapping pieces that
/// disagree, wrong piece counts, non-integral values).
class DataIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lrkit
