#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkz {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad matrix, bad JSON, bad flags).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Expression text that does not follow the grammar.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A search or rewriting loop ran past its configured step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The polynomial system has a common zero; residues are undefined.
class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

/// An arithmetic precondition failed (factorial of a negative integer, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gkz
