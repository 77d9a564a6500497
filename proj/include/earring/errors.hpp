#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace earring {

// Bad input or a violated operation precondition: syntax errors, empty sets,
// probe depths too small to decide, not-less arguments. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position + 1) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A structural guarantee the construction promises failed at runtime.
// Bug-grade: CLI exit code 3.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace earring
