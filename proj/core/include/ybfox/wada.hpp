#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybfox/group_ring.hpp"
#include "ybfox/report.hpp"

namespace ybfox {

/// A candidate braid-representation pair (u, v) of words over F(x, y).
/// Construction never checks the braid relations; a failing pair is a
/// valid input to every checker.
struct WadaPair {
  FreeWord u;
  FreeWord v;
  std::string label;

  WadaPair(FreeWord u_word, FreeWord v_word, std::string name = "");
};

/// Parses "u,v" with each side in the word grammar over (x, y).
WadaPair parse_pair(const std::string& text, std::string label = "");

/// The four free derivatives u1 = du/dx, u2 = du/dy, v1 = dv/dx,
/// v2 = dv/dy; always recomputed from the pair.
struct DerivedCoefficients {
  GroupRingElement u1, u2, v1, v2;
};

DerivedCoefficients derived_coefficients(const WadaPair& p);

/// Evaluates both sides of the three braid-relation equations as reduced
/// words over F(x,y,z). All three hold exactly when (u, v) induces a
/// braid representation, hence a Yang-Baxter operation on any group.
RelationReport verify_braid_relations(const WadaPair& p);

/// Wada's classified pairs: the six fixed entries of his list plus one
/// instance of the parametric family (y, y^m x y^-m) per m in
/// [m_min, m_max], labeled W1..W7 in list order (the family is W4).
std::vector<WadaPair> wada_catalog(int m_min = -2, int m_max = 2);

/// Checks the nine derived-coefficient identities in ZF(x,y,z), built by
/// substituting the rank-2 coefficients into their argument words and
/// multiplying strictly in written order.
RelationReport verify_lemma1(const WadaPair& p);

/// Checks self-distributivity of x*y := v(x,y) symbolically in F(x,y,z),
/// reports whether u(x,y) = y (informational), and when it does, also
/// checks the three v-only rack-algebra identities with eta = v1 and
/// tau = v2 noted in the report.
RelationReport rack_check(const WadaPair& p);

}  // namespace ybfox
