#pragma once

// Shared helpers for the unit and acceptance suites: a deterministic family
// of small test groupoids with known flat-section counts, rooted retraction
// data for induction tests, and adapters between character value maps.

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/algebra.hpp"
#include "qdouble/cochain.hpp"
#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"

namespace qdouble::testutil {

/// Registry specs for every group of order <= 8 we exercise repeatedly.
inline const std::vector<std::string>& small_group_specs() {
  static const std::vector<std::string> specs = {
      "cyclic:2",
      "cyclic:3",
      "cyclic:4",
      "cyclic:5",
      "cyclic:6",
      "cyclic:7",
      "cyclic:8",
      "product:cyclic:2,cyclic:2",
      "product:cyclic:2,cyclic:4",
      "product:cyclic:2,cyclic:2,cyclic:2",
      "symmetric:3",
      "dihedral:4",
  };
  return specs;
}

/// A connected groupoid on k objects whose morphisms x -> y carry a label
/// from Z/n, composing additively: morphism (y, x, a) has id
/// (y*k + x)*n + a.  Every object pair is connected, every vertex group is
/// cyclic of order n.
inline Groupoid cyclic_bundle(int k, int n) {
  const int m = k * k * n;
  const auto id_of = [&](int y, int x, int a) { return (y * k + x) * n + a; };
  std::vector<int> src(m), dst(m), identities(k);
  for (int y = 0; y < k; ++y)
    for (int x = 0; x < k; ++x)
      for (int a = 0; a < n; ++a) {
        src[id_of(y, x, a)] = x;
        dst[id_of(y, x, a)] = y;
      }
  for (int x = 0; x < k; ++x) identities[x] = id_of(x, x, 0);
  std::vector<std::int32_t> table(static_cast<std::size_t>(m) * m, -1);
  for (int m2 = 0; m2 < m; ++m2)
    for (int m1 = 0; m1 < m; ++m1) {
      const int y2 = m2 / (k * n), x2 = (m2 / n) % k, a2 = m2 % n;
      const int y1 = m1 / (k * n), x1 = (m1 / n) % k, a1 = m1 % n;
      if (x2 == y1)
        table[static_cast<std::size_t>(m2) * m + m1] = id_of(y2, x1, (a2 + a1) % n);
    }
  return Groupoid(k, std::move(src), std::move(dst), std::move(identities),
                  std::move(table));
}

/// A seeded disjoint union of cyclic bundles, together with the data needed
/// to build exact character-valued 1-cocycles on it: the cyclic order of
/// each component and the additive label of each morphism.
struct TestGroupoid {
  std::unique_ptr<Groupoid> gpd;
  std::vector<int> comp_order;  // per component
  std::vector<int> angle;       // per morphism
};

inline TestGroupoid random_test_groupoid(std::uint64_t seed, int max_objects = 12) {
  std::mt19937_64 rng(seed);
  std::vector<Groupoid> parts;
  std::vector<int> orders, angles;
  int left = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_objects));
  while (left > 0) {
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, left)));
    const int n = 1 + static_cast<int>(rng() % 6);
    parts.push_back(cyclic_bundle(k, n));
    orders.push_back(n);
    for (int m = 0; m < parts.back().num_morphisms(); ++m) angles.push_back(m % n);
    left -= k;
  }
  std::vector<const Groupoid*> ptrs;
  ptrs.reserve(parts.size());
  for (const Groupoid& p : parts) ptrs.push_back(&p);
  TestGroupoid out;
  out.gpd = std::make_unique<Groupoid>(disjoint_union(ptrs));
  out.comp_order = std::move(orders);
  out.angle = std::move(angles);
  return out;
}

/// The 1-cocycle sending a morphism with label a in component c to
/// e^{2 pi i j[c] a / n_c}.  Flat sections exist on component c exactly when
/// j[c] is divisible by n_c.
inline Cochain character_cocycle(const TestGroupoid& tg, const std::vector<int>& j) {
  return Cochain(*tg.gpd, 1, [&](std::span<const int> t) {
    const int c = tg.gpd->components()[tg.gpd->src(t[0])];
    return Phase(static_cast<std::int64_t>(j[c]) * tg.angle[t[0]], tg.comp_order[c]);
  });
}

/// Retraction data for a connected groupoid with a prescribed basepoint:
/// to_basepoint is built along a breadth-first search from the root.
inline RetractionData rooted_retraction_data(const Groupoid& g, int root) {
  RetractionData data;
  data.basepoint.assign(g.num_objects(), root);
  data.to_basepoint.assign(g.num_objects(), -1);
  data.to_basepoint[root] = g.identity_at(root);
  std::queue<int> queue;
  queue.push(root);
  while (!queue.empty()) {
    const int y = queue.front();
    queue.pop();
    for (const int m : g.to(y)) {
      const int u = g.src(m);
      if (data.to_basepoint[u] == -1) {
        data.to_basepoint[u] = g.compose(data.to_basepoint[y], m);
        queue.push(u);
      }
    }
  }
  return data;
}

/// Reindexes a twisted character of a group double by commuting pairs:
/// the automorphism with source loop x and direction g becomes the key
/// {x, g}.
inline std::map<std::pair<int, int>, std::complex<double>> elliptic_chi(
    const LoopGroupoid& loop, const TwistedCharacter& c) {
  std::map<std::pair<int, int>, std::complex<double>> chi;
  for (const auto& [m, value] : c.values) {
    const int x = loop.object_loop[loop.gpd.src(m)];
    const int g = loop.morphism_g[m];
    chi[{x, g}] = value;
  }
  return chi;
}

/// Multiset of irreducible dimensions.
inline std::map<int, int> dimension_multiset(const Decomposition& dec) {
  std::map<int, int> out;
  for (const AlgebraRep& r : dec.irreps) ++out[r.dim];
  return out;
}

/// Sup distance between two character value maps over the same key set.
inline double character_distance(const TwistedCharacter& a, const TwistedCharacter& b) {
  double worst = 0.0;
  for (const auto& [k, va] : a.values) {
    const auto it = b.values.find(k);
    if (it == b.values.end()) return 1e18;
    worst = std::max(worst, std::abs(va - it->second));
  }
  return a.values.size() == b.values.size() ? worst : 1e18;
}

}  // namespace qdouble::testutil
