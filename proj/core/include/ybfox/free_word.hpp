#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ybfox/alphabet.hpp"

namespace ybfox {

/// One letter of a word: a generator index and an exponent of +1 or -1.
struct Letter {
  int gen = 0;
  int exp = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in F_n. The empty sequence is the identity.
/// Immutable after construction; equality is syntactic equality of the
/// reduced letter sequences over the same alphabet.
class FreeWord {
 public:
  /// The identity word.
  explicit FreeWord(AlphabetPtr alphabet);

  static FreeWord identity(AlphabetPtr alphabet) { return FreeWord(std::move(alphabet)); }

  /// The one-letter word g_i^exp (exp must be +1 or -1).
  static FreeWord generator(AlphabetPtr alphabet, int index, int exp = +1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const;

  friend bool operator==(const FreeWord& a, const FreeWord& b);
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }

 private:
  friend FreeWord reduce(const AlphabetPtr&, const std::vector<Letter>&);
  friend FreeWord multiply(const FreeWord&, const FreeWord&);
  friend FreeWord power(const FreeWord&, long long);
  friend FreeWord substitute(const FreeWord&, const std::vector<FreeWord>&);

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;  // invariant: freely reduced
};

/// Free reduction: cancels every adjacent g g^-1 / g^-1 g pair. The result
/// is the unique reduced word equal to the input in F_n; idempotent.
FreeWord reduce(const AlphabetPtr& alphabet, const std::vector<Letter>& raw);

/// Group multiplication: reduced concatenation.
FreeWord multiply(const FreeWord& w1, const FreeWord& w2);

inline FreeWord operator*(const FreeWord& w1, const FreeWord& w2) { return multiply(w1, w2); }

/// Group inverse: reverse the letters and flip every exponent.
FreeWord invert(const FreeWord& w);

/// w^k for any integer k (k <= 0 goes through the inverse).
FreeWord power(const FreeWord& w, long long k);

/// The homomorphism sending generator i of w's alphabet to images[i].
/// All images must share one target alphabet; the result lives there.
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images);

/// Shortlex order on reduced words: length first, then letterwise by
/// generator index, then by sign with +1 before -1. Total order; used as
/// the canonical term order everywhere terms are serialized.
bool shortlex_less(const FreeWord& a, const FreeWord& b);

struct ShortlexLess {
  bool operator()(const FreeWord& a, const FreeWord& b) const { return shortlex_less(a, b); }
};

/// Parses the word grammar:
///   word  := "1" | term+            (terms separated by optional spaces)
///   term  := NAME ("^" SIGN? DIGITS)?
/// Juxtaposition is group multiplication left to right; "x^-1" is the
/// inverse of x and bare NAME means exponent 1. Adjacent names without
/// whitespace resolve by longest declared generator name ("yxy" = y x y).
/// Throws ParseError with the byte offset on malformed input or an
/// undeclared generator.
FreeWord parse_word(const std::string& text, const AlphabetPtr& alphabet);

/// Canonical rendering with run-length exponents: identity is "1",
/// otherwise runs separated by single spaces, e.g. "y^2 x", "x^-1 y^-1 x".
/// parse_word(format_word(w)) == w for every word.
std::string format_word(const FreeWord& w);

}  // namespace ybfox
