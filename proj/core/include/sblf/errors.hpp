#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sblf {

// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Raised for inputs outside the range the toolkit can decide (classification beyond r = 5).
class Unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sblf
