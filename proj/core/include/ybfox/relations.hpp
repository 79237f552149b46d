#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ybfox/group_ring.hpp"

namespace ybfox {

/// A word-valued expression over F(x,y,z): a generator leaf or one of the
/// two-argument word tokens u(.,.), v(.,.) of a pair.
struct WordExpr {
  enum class Kind { Gen, U, V };
  Kind kind = Kind::Gen;
  int gen = 0;  // when kind == Gen
  std::shared_ptr<WordExpr> left, right;
};

/// A ring-valued expression: a sum of products of coefficient tokens
/// u1, u2, v1, v2 applied to word expressions. Products multiply in
/// written left-to-right order (the ring is noncommutative).
struct CoefFactor {
  enum class Coef { U1, U2, V1, V2 };
  Coef coef;
  WordExpr left, right;
};

using RingProduct = std::vector<CoefFactor>;
using RingSum = std::vector<RingProduct>;

/// Parses the template grammar
///   wordexpr := "x" | "y" | "z" | ("u"|"v") "(" wordexpr "," wordexpr ")"
WordExpr parse_word_expr(const std::string& text);

/// Parses   ringsum := product ("+" product)*
///          product := coef "(" wordexpr "," wordexpr ")" ...
/// with coef in {u1, u2, v1, v2}; juxtaposition is the ring product.
RingSum parse_ring_expr(const std::string& text);

/// The words and derived coefficients a template row is evaluated against.
/// Words are over the rank-2 alphabet; coefficients are their derivatives.
struct PairSymbols {
  FreeWord u, v;
  GroupRingElement u1, u2, v1, v2;
};

/// Builds the symbol table of a pair (computing the four derivatives).
PairSymbols make_pair_symbols(const FreeWord& u, const FreeWord& v);

/// Evaluates a word expression to a reduced word over F(x,y,z).
FreeWord eval_word_expr(const WordExpr& e, const PairSymbols& s);

/// Evaluates a ring expression to an element of ZF(x,y,z). Every
/// coefficient token c(a,b) substitutes the rank-2 element with
/// x -> a, y -> b before multiplying.
GroupRingElement eval_ring_expr(const RingSum& e, const PairSymbols& s);

/// One identity template: an id plus lhs/rhs source text in the grammar
/// above. `ring` selects word-level or ring-level evaluation.
struct IdentityTemplate {
  std::string id;
  std::string lhs;
  std::string rhs;
  bool ring = false;
};

/// The three braid-relation equations on (u, v), word-level in F(x,y,z).
const std::vector<IdentityTemplate>& braid_equation_templates();

/// The nine derived-coefficient identities in ZF(x,y,z), in the order the
/// equations and derivation variables x, y, z generate them.
const std::vector<IdentityTemplate>& lemma1_templates();

/// Self-distributivity of x*y := v(x,y), word-level.
const IdentityTemplate& rack_self_distributivity_template();

/// The three v-only rack-algebra identities (the specializations of the
/// last three coefficient identities when u(x,y) = y).
const std::vector<IdentityTemplate>& rack_algebra_templates();

}  // namespace ybfox
