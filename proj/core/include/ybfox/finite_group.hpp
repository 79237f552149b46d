#pragma once

#include <string>
#include <vector>

#include "ybfox/free_word.hpp"

namespace ybfox {

/// A finite group given by its Cayley table. Validation at construction
/// guarantees a two-sided identity, full associativity, and a two-sided
/// inverse for every element; failures carry witness indices.
class FiniteGroup {
 public:
  /// table[a][b] = a*b, entries in [0, order). Throws ModelError with the
  /// violated axiom and witnesses.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> names = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// Optional element label; empty when none was provided.
  const std::string& name(int g) const { return names_[g]; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

/// Cyclic group of order n (element i is the i-th power of the generator).
FiniteGroup cyclic_group(int n);

/// Symmetric group on three points, order 6; elements are the one-line
/// permutations of {0,1,2} in lexicographic order, composed left-on-top.
FiniteGroup symmetric_group_s3();

/// Sign of an element of symmetric_group_s3: +1 even, -1 odd.
int s3_parity(int g);

/// Dihedral group of the square, order 8; elements 0..3 are rotations,
/// 4..7 reflections.
FiniteGroup dihedral_group_d4();

/// Evaluation homomorphism F_n -> G: maps generator i to assign[i].
/// assign must cover the word's alphabet.
int eval_word(const FreeWord& w, const std::vector<int>& assign, const FiniteGroup& g);

}  // namespace ybfox
