#pragma once

#include <stdexcept>

namespace pzono {

/// Malformed set data: inconsistent shapes, negative exponents, non-finite entries.
class RepresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A factor value outside [-1, 1].
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An enumeration or tree expansion would exceed its configured cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition (e.g. splitting a set without dependent factors).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pzono
