#pragma once

#include <stdexcept>
#include <string>

namespace cfla {

/// A theorem's hypothesis or an operation's precondition does not hold for the given inputs.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The carrier is larger than the configured enumeration budget.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two sets (or a set and an algebra) live on different carriers.
class CarrierMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs pairwise comparable membership values met an incomparable pair.
class NotHomogeneousError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cfla
