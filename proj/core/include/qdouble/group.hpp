#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdouble {

struct Subgroup;

/// A finite group presented by its full multiplication table.
///
/// Elements are the indices 0..order-1 with the identity at index 0.
/// mul(h, g) is "h after g": for permutation groups the product is
/// composition of functions, (h*g)(i) = h(g(i)).  Construction validates
/// the axioms exhaustively (identity, Latin square, associativity,
/// inverses), so an instance is always a group.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<int> table);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int mul(int h, int g) const { return table_[static_cast<std::size_t>(h) * n_ + g]; }
  int inv(int g) const { return inv_[g]; }
  int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  const std::vector<int>& table() const { return table_; }

  /// Conjugacy classes; each class lists its elements ascending, classes
  /// are ordered by their least element, so the identity class comes first.
  std::vector<std::vector<int>> conjugacy_classes() const;

  /// Centralizer of x as a group in its own right, with the embedding
  /// vector mapping centralizer indices to parent elements (ascending,
  /// identity first).
  Subgroup centralizer(int x) const;

  /// All mutually commuting ordered k-tuples, k in {2, 3}, in lexicographic
  /// order.
  std::vector<std::vector<int>> commuting_tuples(int k) const;

 private:
  std::string name_;
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
};

/// A group together with an embedding into a parent group: embedding[i] is
/// the parent-group element realizing subgroup element i.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embedding;
};

FiniteGroup build_cyclic(int n);

/// Direct product with lexicographic, a-major element order:
/// index(a, b) = index(a) * |B| + index(b).
FiniteGroup build_product(const FiniteGroup& a, const FiniteGroup& b);

/// Symmetric group on n letters, n <= 5.  Elements are the n! one-line
/// permutations in lexicographic order (identity first); the product is
/// composition of functions.
FiniteGroup build_symmetric(int n);

/// Dihedral group of the regular n-gon, order 2n.  Indices 0..n-1 are the
/// rotations r^k, indices n..2n-1 are the reflections s*r^k.
FiniteGroup build_dihedral(int n);

}  // namespace qdouble
