#include "ybfox/fox.hpp"

#include "ybfox/errors.hpp"

namespace ybfox {

GroupRingElement fox_derivative(const FreeWord& w, int i) {
  const AlphabetPtr& alphabet = w.alphabet();
  if (i < 0 || i >= alphabet->size())
    throw AlphabetError("fox_derivative: generator index " + std::to_string(i) +
                        " out of range for rank " + std::to_string(alphabet->size()));

  // Single left-to-right fold: with prefix p before each letter,
  // g_i contributes p and g_i^-1 contributes -(p g_i^-1).
  GroupRingElement sum(alphabet);
  FreeWord prefix(alphabet);
  for (const Letter& l : w.letters()) {
    if (l.exp > 0) {
      if (l.gen == i) sum = add(sum, embed(prefix));
      prefix = multiply(prefix, FreeWord::generator(alphabet, l.gen, +1));
    } else {
      prefix = multiply(prefix, FreeWord::generator(alphabet, l.gen, -1));
      if (l.gen == i) sum = add(sum, scale(-1, embed(prefix)));
    }
  }
  return sum;
}

GroupRingElement fox_derivative(const GroupRingElement& e, int i) {
  GroupRingElement sum(e.alphabet());
  for (const auto& [w, c] : e.terms()) sum = add(sum, scale(c, fox_derivative(w, i)));
  return sum;
}

}  // namespace ybfox
