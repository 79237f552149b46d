#include "ybfox/gmodule.hpp"

#include <string>

#include "ybfox/errors.hpp"

namespace ybfox {

Matrix identity_matrix(int size) {
  Matrix m;
  m.size = size;
  m.data.assign(static_cast<size_t>(size) * size, 0);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

Matrix zero_matrix(int size) {
  Matrix m;
  m.size = size;
  m.data.assign(static_cast<size_t>(size) * size, 0);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, int modulus) {
  Matrix r = zero_matrix(a.size);
  for (int i = 0; i < a.size; ++i)
    for (int l = 0; l < a.size; ++l) {
      const long long ail = a.at(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < a.size; ++j)
        r.at(i, j) = static_cast<int>((r.at(i, j) + ail * b.at(l, j)) % modulus);
    }
  return r;
}

std::vector<int> mat_vec(const Matrix& a, const std::vector<int>& v, int modulus) {
  std::vector<int> r(static_cast<size_t>(a.size), 0);
  for (int i = 0; i < a.size; ++i) {
    long long acc = 0;
    for (int j = 0; j < a.size; ++j) acc += 1LL * a.at(i, j) * v[j];
    r[i] = static_cast<int>(acc % modulus);
  }
  return r;
}

GModule GModule::make(const FiniteGroup& group, int modulus, int rank,
                      std::vector<Matrix> actions) {
  if (modulus < 2) throw ModelError("module modulus must be at least 2");
  if (rank < 1) throw ModelError("module rank must be at least 1");
  const int n = group.order();
  if (static_cast<int>(actions.size()) != n)
    throw ModelError("expected one action matrix per group element (" + std::to_string(n) +
                     "), got " + std::to_string(actions.size()));
  for (int g = 0; g < n; ++g) {
    Matrix& a = actions[g];
    if (a.size != rank || a.data.size() != static_cast<size_t>(rank) * rank)
      throw ModelError("action matrix for element " + std::to_string(g) + " is not " +
                       std::to_string(rank) + "x" + std::to_string(rank));
    for (int& x : a.data) x = ((x % modulus) + modulus) % modulus;
  }

  const Matrix id = identity_matrix(rank);
  if (actions[group.identity()] != id)
    throw ModelError("identity element does not act as the identity matrix");
  for (int g = 0; g < n; ++g) {
    const int gi = group.inverse(g);
    if (mat_mul(actions[g], actions[gi], modulus) != id ||
        mat_mul(actions[gi], actions[g], modulus) != id)
      throw ModelError("action of element " + std::to_string(g) +
                       " is not invertible (the action of its inverse " + std::to_string(gi) +
                       " does not invert it mod " + std::to_string(modulus) + ")");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (actions[group.mul(g, h)] != mat_mul(actions[g], actions[h], modulus))
        throw ModelError("action is not a homomorphism at pair (" + std::to_string(g) + "," +
                         std::to_string(h) + "): action(g*h) differs from action(g)*action(h)");

  GModule v;
  v.modulus_ = modulus;
  v.rank_ = rank;
  v.actions_ = std::move(actions);
  return v;
}

long long GModule::vector_count() const {
  long long c = 1;
  for (int i = 0; i < rank_; ++i) c *= modulus_;
  return c;
}

GModule trivial_module(const FiniteGroup& group, int modulus, int rank) {
  std::vector<Matrix> actions(static_cast<size_t>(group.order()), identity_matrix(rank));
  return GModule::make(group, modulus, rank, std::move(actions));
}

Matrix ring_action_matrix(const GroupRingElement& e, const std::vector<int>& assign,
                          const FiniteGroup& g, const GModule& v) {
  const int m = v.modulus();
  Matrix acc = zero_matrix(v.rank());
  for (const auto& [word, coeff] : e.terms()) {
    const int t = eval_word(word, assign, g);
    int cm = static_cast<int>(coeff % m);
    if (cm < 0) cm += m;
    if (cm == 0) continue;
    const Matrix& a = v.action(t);
    for (size_t i = 0; i < acc.data.size(); ++i)
      acc.data[i] = static_cast<int>((acc.data[i] + 1LL * cm * a.data[i]) % m);
  }
  return acc;
}

std::vector<int> apply_ring(const GroupRingElement& e, const std::vector<int>& assign,
                            const FiniteGroup& g, const GModule& v,
                            const std::vector<int>& vec) {
  const int m = v.modulus();
  const int k = v.rank();
  if (static_cast<int>(vec.size()) != k)
    throw ModelError("apply_ring: vector has " + std::to_string(vec.size()) +
                     " entries, module rank is " + std::to_string(k));
  std::vector<int> acc(static_cast<size_t>(k), 0);
  for (const auto& [word, coeff] : e.terms()) {
    const int t = eval_word(word, assign, g);
    int cm = static_cast<int>(coeff % m);
    if (cm < 0) cm += m;
    if (cm == 0) continue;
    const std::vector<int> moved = mat_vec(v.action(t), vec, m);
    for (int i = 0; i < k; ++i) acc[i] = static_cast<int>((acc[i] + 1LL * cm * moved[i]) % m);
  }
  return acc;
}

}  // namespace ybfox
