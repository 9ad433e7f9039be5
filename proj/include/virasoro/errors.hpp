#pragma once

#include <stdexcept>
#include <string>

namespace vir {

// Bad input from a caller (malformed rational, label out of range, ...).
class UserError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed at runtime. Signals a bug or an oracle
// disagreement, never a user mistake.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vir
