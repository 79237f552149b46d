#pragma once

#include <vector>

#include "ybfox/finite_group.hpp"
#include "ybfox/group_ring.hpp"

namespace ybfox {

/// Square matrix over Z/m, row-major, entries normalized to [0, m).
struct Matrix {
  int size = 0;
  std::vector<int> data;

  int at(int r, int c) const { return data[r * size + c]; }
  int& at(int r, int c) { return data[r * size + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity_matrix(int size);
Matrix zero_matrix(int size);
Matrix mat_mul(const Matrix& a, const Matrix& b, int modulus);
std::vector<int> mat_vec(const Matrix& a, const std::vector<int>& v, int modulus);

/// The coefficient module (Z/m)^k carrying a group action: one k x k
/// matrix per group element, acting on column vectors from the left.
/// Construction validates that the identity acts as the identity matrix,
/// that every action has a two-sided inverse (the action of the inverse
/// element), and that the assignment is a homomorphism; failures name the
/// witnesses.
class GModule {
 public:
  /// actions[g] is the matrix of group element g. Entries are reduced
  /// mod modulus before validation. Throws ModelError on any violation.
  static GModule make(const FiniteGroup& group, int modulus, int rank,
                      std::vector<Matrix> actions);

  int modulus() const { return modulus_; }
  int rank() const { return rank_; }
  const Matrix& action(int g) const { return actions_[g]; }

  /// modulus^rank, the number of vectors.
  long long vector_count() const;

 private:
  GModule() = default;

  int modulus_ = 0;
  int rank_ = 0;
  std::vector<Matrix> actions_;
};

/// Trivial module: every element acts as the k x k identity.
GModule trivial_module(const FiniteGroup& group, int modulus, int rank = 1);

/// Image of a group-ring element in the matrix ring of the module:
/// the sum of coeff * action(eval_word(w, assign)) over the terms of e,
/// entries reduced mod m.
Matrix ring_action_matrix(const GroupRingElement& e, const std::vector<int>& assign,
                          const FiniteGroup& g, const GModule& v);

/// Action of a group-ring element on a vector: for each term (w, c) the
/// word acts through the module action and the results are summed,
///   sum_w c * action(eval_word(w, assign)) * vec   (mod m).
/// Z-linear in e and in vec; agrees with mat_vec(ring_action_matrix(e,
/// assign, g, v), vec).
std::vector<int> apply_ring(const GroupRingElement& e, const std::vector<int>& assign,
                            const FiniteGroup& g, const GModule& v,
                            const std::vector<int>& vec);

}  // namespace ybfox
