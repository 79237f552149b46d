#pragma once

#include "ybfox/group_ring.hpp"

namespace ybfox {

/// The free derivative of a word with respect to generator i: the unique
/// derivation on ZF_n with d(g_j) = delta_ij and d(w1 w2) = d(w1) + w1 d(w2).
/// In particular d(1) = 0 and d(g_i^-1) = -g_i^-1.
GroupRingElement fox_derivative(const FreeWord& w, int i);

/// Z-linear extension of fox_derivative over a ring element's terms.
GroupRingElement fox_derivative(const GroupRingElement& e, int i);

}  // namespace ybfox
