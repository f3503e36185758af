#pragma once

#include <stdexcept>
#include <string>

namespace seidel {

enum class ParseErrorKind {
  empty,
  bad_syntax,    // characters outside {0,1} or malformed block notation
  leading_one,   // first symbol must be 0
  disconnected,  // n >= 2 and the last symbol is 0
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::invalid_argument {
 public:
  // position is 1-based; 0 when the error is not tied to a character.
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& what)
      : std::invalid_argument(what), kind_(kind), position_(position) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

// A precondition on sizes or parameters was violated (n out of range,
// singleton sequence where a block form is required, dimension mismatch).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed-form result disagreed with an exact check. Never expected on a
// correct build.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace seidel
