#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "ybfox/free_word.hpp"

namespace ybfox {

/// Coefficient type of the group ring: arbitrary-precision integers, so
/// iterated substitution and products can never overflow.
using Int = boost::multiprecision::cpp_int;

/// An element of the integral group ring ZF_n: a finite Z-linear
/// combination of reduced words. Stored as a word -> coefficient map in
/// shortlex order with no zero coefficients; the zero element is the
/// empty map. Immutable value semantics.
class GroupRingElement {
 public:
  using TermMap = std::map<FreeWord, Int, ShortlexLess>;

  /// The zero element.
  explicit GroupRingElement(AlphabetPtr alphabet);

  static GroupRingElement zero(AlphabetPtr alphabet) { return GroupRingElement(std::move(alphabet)); }

  /// The ring unit: the identity word with coefficient 1.
  static GroupRingElement one(AlphabetPtr alphabet);

  /// Builds an element from raw (word, coefficient) terms, merging like
  /// words and pruning zeros. All words must share `alphabet`.
  static GroupRingElement from_terms(AlphabetPtr alphabet,
                                     const std::vector<std::pair<FreeWord, Int>>& terms);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Coefficient of a word (zero if absent).
  Int coefficient(const FreeWord& w) const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

 private:
  friend GroupRingElement add(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement ring_multiply(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement embed(const FreeWord&);
  friend GroupRingElement scale(const Int&, const GroupRingElement&);
  friend GroupRingElement substitute_ring(const GroupRingElement&, const std::vector<FreeWord>&);

  AlphabetPtr alphabet_;
  TermMap terms_;
};

/// Coefficientwise sum with zero-pruning.
GroupRingElement add(const GroupRingElement& e1, const GroupRingElement& e2);

/// Convolution product: the bilinear extension of word multiplication.
/// Associative and unital but not commutative; factor order is preserved.
GroupRingElement ring_multiply(const GroupRingElement& e1, const GroupRingElement& e2);

/// The word w as a ring element with coefficient 1.
GroupRingElement embed(const FreeWord& w);

/// Scalar multiple k*e (k = 0 gives zero).
GroupRingElement scale(const Int& k, const GroupRingElement& e);

inline GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) { return add(a, b); }
inline GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return ring_multiply(a, b); }
inline GroupRingElement operator-(const GroupRingElement& e) { return scale(-1, e); }
inline GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return add(a, scale(-1, b)); }

/// The ring homomorphism induced by generator i -> images[i]: substitutes
/// every key word and re-collects terms (collisions merge).
GroupRingElement substitute_ring(const GroupRingElement& e, const std::vector<FreeWord>& images);

/// Augmentation: the sum of all coefficients. Ring homomorphism to Z.
Int augmentation(const GroupRingElement& e);

/// Canonical text: signed terms in shortlex order, coefficient magnitude 1
/// omitted, others prefixed with "*", e.g. "-x^-1 + x^-1 y^-1", "1 + y x",
/// "3*x y", "0".
std::string format_element(const GroupRingElement& e);

/// Parses the canonical element text back. Inverse of format_element.
GroupRingElement parse_element(const std::string& text, const AlphabetPtr& alphabet);

}  // namespace ybfox
