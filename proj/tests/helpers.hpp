#pragma once

#include <random>
#include <vector>

#include "ybfox/free_word.hpp"
#include "ybfox/group_ring.hpp"

namespace ybfox::testing {

/// Random raw letter sequence, unreduced.
inline std::vector<Letter> random_letters(std::mt19937& rng, int rank, int len) {
  std::vector<Letter> raw;
  raw.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i)
    raw.push_back({static_cast<int>(rng() % static_cast<unsigned>(rank)),
                   rng() % 2 ? +1 : -1});
  return raw;
}

inline FreeWord random_word(std::mt19937& rng, const AlphabetPtr& alphabet, int max_len) {
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  return reduce(alphabet, random_letters(rng, alphabet->size(), len));
}

/// Random element with a handful of terms and small coefficients.
inline GroupRingElement random_element(std::mt19937& rng, const AlphabetPtr& alphabet,
                                       int max_terms = 4, int max_len = 6) {
  GroupRingElement e = GroupRingElement::zero(alphabet);
  const int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
  for (int i = 0; i < terms; ++i) {
    const int coeff = static_cast<int>(rng() % 9) - 4;
    e = add(e, scale(Int(coeff), embed(random_word(rng, alphabet, max_len))));
  }
  return e;
}

}  // namespace ybfox::testing
