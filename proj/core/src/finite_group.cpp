#include "ybfox/finite_group.hpp"

#include <array>

#include "ybfox/errors.hpp"

namespace ybfox {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ModelError("group table is empty");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw ModelError("group table row " + std::to_string(a) + " has " +
                       std::to_string(table[a].size()) + " entries, expected " +
                       std::to_string(n));
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw ModelError("group table entry (" + std::to_string(a) + "," + std::to_string(b) +
                         ") = " + std::to_string(table[a][b]) + " out of range");
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (identity < 0) throw ModelError("group table has no two-sided identity");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ModelError("group table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + "): (" +
                           std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                           " = " + std::to_string(table[table[a][b]][c]) + " but " +
                           std::to_string(a) + "*(" + std::to_string(b) + "*" + std::to_string(c) +
                           ") = " + std::to_string(table[a][table[b][c]]));

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0)
      throw ModelError("element " + std::to_string(a) + " has no two-sided inverse");
  }

  if (names.empty()) names.resize(n);
  if (static_cast<int>(names.size()) != n)
    throw ModelError("expected " + std::to_string(n) + " element names, got " +
                     std::to_string(names.size()));

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.names_ = std::move(names);
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw ModelError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup::from_table(std::move(table));
}

namespace {

// one-line permutations of {0,1,2} in lexicographic order
constexpr std::array<std::array<int, 3>, 6> kS3Perms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

int s3_index(const std::array<int, 3>& p) {
  for (int i = 0; i < 6; ++i)
    if (kS3Perms[i] == p) return i;
  return -1;
}

}  // namespace

FiniteGroup symmetric_group_s3() {
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      // (p*q)(i) = p(q(i))
      std::array<int, 3> composed{};
      for (int i = 0; i < 3; ++i) composed[i] = kS3Perms[a][kS3Perms[b][i]];
      table[a][b] = s3_index(composed);
    }
  return FiniteGroup::from_table(std::move(table));
}

/// Parity of the S3 element with the conventions of symmetric_group_s3:
/// +1 for even permutations, -1 for odd.
int s3_parity(int g) {
  const auto& p = kS3Perms.at(g);
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? +1 : -1;
}

FiniteGroup dihedral_group_d4() {
  // element a*4+k is s^a r^k with r^4 = s^2 = 1 and r s = s r^-1
  auto compose = [](int g, int h) {
    const int ga = g / 4, gk = g % 4;
    const int ha = h / 4, hk = h % 4;
    const int k = ha ? (hk - gk + 8) % 4 : (gk + hk) % 4;
    return ((ga + ha) % 2) * 4 + k;
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a][b] = compose(a, b);
  return FiniteGroup::from_table(std::move(table));
}

int eval_word(const FreeWord& w, const std::vector<int>& assign, const FiniteGroup& g) {
  if (static_cast<int>(assign.size()) != w.alphabet()->size())
    throw AlphabetError("eval_word: expected " + std::to_string(w.alphabet()->size()) +
                        " generator assignments, got " + std::to_string(assign.size()));
  for (const int a : assign)
    if (a < 0 || a >= g.order())
      throw ModelError("eval_word: assigned element " + std::to_string(a) +
                       " is outside the group");
  int acc = g.identity();
  for (const Letter& l : w.letters()) {
    int t = assign[l.gen];
    if (l.exp < 0) t = g.inverse(t);
    acc = g.mul(acc, t);
  }
  return acc;
}

}  // namespace ybfox
