#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ybfox {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Alphabet mismatch between operands, or a generator index out of range.
class AlphabetError : public Error {
 public:
  explicit AlphabetError(const std::string& what) : Error(what) {}
};

/// Text that does not conform to the word / element / file grammar.
/// `offset` is the byte position of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A finite group or module failed validation. The message names the
/// violated axiom and the witness indices.
class ModelError : public Error {
 public:
  explicit ModelError(const std::string& what) : Error(what) {}
};

/// An exhaustive check would exceed the evaluation budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace ybfox
