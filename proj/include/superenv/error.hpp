#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superenv {

/// Raised when an operation's mathematical preconditions fail (mismatched
/// algebras, invalid structure tables, non-exact division, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by the expression and algebra-file parsers. `position` is a 0-based
/// byte offset into the parsed text.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at position " + std::to_string(position) + ": " + message),
        position_(position), message_(message) {}

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

private:
  std::size_t position_;
  std::string message_;
};

} // namespace superenv
