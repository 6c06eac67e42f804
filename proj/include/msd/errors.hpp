#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msd {

/// Operands live on different index spaces (e.g. mismatched support sizes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed input file. `line` is 1-based and 0 when not applicable;
/// `byte_offset` is set for JSON syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t byte_offset = 0)
      : std::runtime_error(what), line_(line), byte_offset_(byte_offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t line_;
  std::size_t byte_offset_;
};

}  // namespace msd
