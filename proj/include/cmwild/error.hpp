#pragma once

#include <stdexcept>
#include <string>

namespace cmwild {

/// Malformed or inconsistent user input (bad polynomial text, non-homogeneous
/// relation, mismatched matrix sizes). The CLI maps it to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A randomized or bounded search ran out of its budget. Exit status 3.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant, e.g. a chain-map lift that should exist but does not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cmwild
