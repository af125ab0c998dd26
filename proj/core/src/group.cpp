#include "qdouble/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qdouble {

FiniteGroup::FiniteGroup(std::string name, std::vector<int> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t sq = table_.size();
  int n = 0;
  while (static_cast<std::size_t>(n) * n < sq) ++n;
  if (static_cast<std::size_t>(n) * n != sq || n == 0)
    throw std::invalid_argument("group " + name_ + ": table is not a nonempty square");
  n_ = n;

  for (int v : table_)
    if (v < 0 || v >= n_)
      throw std::invalid_argument("group " + name_ + ": table entry out of range");
  for (int g = 0; g < n_; ++g)
    if (mul(0, g) != g || mul(g, 0) != g)
      throw std::invalid_argument("group " + name_ + ": index 0 is not an identity");

  // Latin square: each row and column is a permutation.
  std::vector<char> seen(static_cast<std::size_t>(n_));
  for (int h = 0; h < n_; ++h) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int g = 0; g < n_; ++g) seen[mul(h, g)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("group " + name_ + ": row " + std::to_string(h) +
                                  " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int g = 0; g < n_; ++g) seen[mul(g, h)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("group " + name_ + ": column " + std::to_string(h) +
                                  " is not a permutation");
  }

  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("group " + name_ + ": associativity fails at (" +
                                      std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + ")");

  inv_.assign(static_cast<std::size_t>(n_), -1);
  for (int g = 0; g < n_; ++g)
    for (int h = 0; h < n_; ++h)
      if (mul(h, g) == 0) inv_[g] = h;
  for (int g = 0; g < n_; ++g)
    if (inv_[g] < 0 || mul(g, inv_[g]) != 0)
      throw std::invalid_argument("group " + name_ + ": inverses fail");
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<char> done(static_cast<std::size_t>(n_), 0);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < n_; ++g) {
    if (done[g]) continue;
    std::vector<int> cls;
    for (int h = 0; h < n_; ++h) {
      const int c = conj(h, g);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  // Outer scan visits least elements first, so classes are already ordered
  // by least element and the identity class is first.
  return classes;
}

Subgroup FiniteGroup::centralizer(int x) const {
  if (x < 0 || x >= n_) throw std::invalid_argument("centralizer: element out of range");
  std::vector<int> emb;
  for (int g = 0; g < n_; ++g)
    if (commute(g, x)) emb.push_back(g);
  const int m = static_cast<int>(emb.size());
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < m; ++i) pos[emb[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = pos[mul(emb[i], emb[j])];
      if (p < 0) throw std::logic_error("centralizer: not closed under product");
      table[static_cast<std::size_t>(i) * m + j] = p;
    }
  return Subgroup{FiniteGroup(name_ + ".centralizer(" + std::to_string(x) + ")",
                              std::move(table)),
                  std::move(emb)};
}

std::vector<std::vector<int>> FiniteGroup::commuting_tuples(int k) const {
  if (k != 2 && k != 3) throw std::invalid_argument("commuting_tuples: k must be 2 or 3");
  std::vector<std::vector<int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!commute(a, b)) continue;
      if (k == 2) {
        out.push_back({a, b});
        continue;
      }
      for (int c = 0; c < n_; ++c)
        if (commute(a, c) && commute(b, c)) out.push_back({a, b, c});
    }
  return out;
}

FiniteGroup build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("build_cyclic: n must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup("cyclic:" + std::to_string(n), std::move(table));
}

FiniteGroup build_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int p = a.mul(i / nb, j / nb);
      const int q = b.mul(i % nb, j % nb);
      table[static_cast<std::size_t>(i) * n + j] = p * nb + q;
    }
  return FiniteGroup("product:" + a.name() + "," + b.name(), std::move(table));
}

FiniteGroup build_symmetric(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("build_symmetric: n must be between 1 and 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());

  const auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int t = 0; t < n; ++t) comp[t] = perms[i][perms[j][t]];
      table[static_cast<std::size_t>(i) * m + j] = index_of(comp);
    }
  return FiniteGroup("symmetric:" + std::to_string(n), std::move(table));
}

FiniteGroup build_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("build_dihedral: n must be positive");
  const int m = 2 * n;
  // (flip, shift): rotations (0,k), reflections (1,k) with s*r^k.
  // r^a * r^b = r^(a+b); r^a * s r^b = s r^(b-a); s r^a * r^b = s r^(a+b);
  // s r^a * s r^b = r^(b-a).
  const auto idx = [&](int flip, int k) { return flip * n + ((k % n) + n) % n; };
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int fi = i / n, ki = i % n;
      const int fj = j / n, kj = j % n;
      const int flip = fi ^ fj;
      const int k = fj == 0 ? ki + kj : kj - ki;
      table[static_cast<std::size_t>(i) * m + j] = idx(flip, k);
    }
  return FiniteGroup("dihedral:" + std::to_string(n), std::move(table));
}

}  // namespace qdouble
