#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid group specification. `position` is the offset into
/// the input text where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Element does not fit the group it is used with.
class ElementError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never caused by user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace powdeg
