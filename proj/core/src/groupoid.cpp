#include "qdouble/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qdouble {

namespace {

void fail(const std::string& what) { throw std::invalid_argument("groupoid: " + what); }

}  // namespace

Groupoid::Groupoid(int num_objects, std::vector<int> src, std::vector<int> dst,
                   std::vector<int> identities, std::vector<std::int32_t> table)
    : num_objects_(num_objects),
      src_(std::move(src)),
      dst_(std::move(dst)),
      identity_(std::move(identities)),
      table_(std::move(table)) {
  const std::size_t m = src_.size();
  if (num_objects_ <= 0) fail("needs at least one object");
  if (dst_.size() != m) fail("src/dst size mismatch");
  if (identity_.size() != static_cast<std::size_t>(num_objects_))
    fail("one identity per object required");
  if (table_.size() != m * m) fail("composition table must be m x m");
  for (std::size_t i = 0; i < m; ++i)
    if (src_[i] < 0 || src_[i] >= num_objects_ || dst_[i] < 0 || dst_[i] >= num_objects_)
      fail("morphism endpoints out of range");

  from_.assign(num_objects_, {});
  to_.assign(num_objects_, {});
  for (std::size_t i = 0; i < m; ++i) {
    from_[src_[i]].push_back(static_cast<int>(i));
    to_[dst_[i]].push_back(static_cast<int>(i));
  }

  for (int g2 = 0; g2 < static_cast<int>(m); ++g2)
    for (int g1 = 0; g1 < static_cast<int>(m); ++g1) {
      const int c = table_[static_cast<std::size_t>(g2) * m + g1];
      if (dst_[g1] != src_[g2]) {
        if (c != -1) fail("composite defined for a non-composable pair");
        continue;
      }
      if (c < 0 || c >= static_cast<int>(m)) fail("composite id out of range");
      if (src_[c] != src_[g1] || dst_[c] != dst_[g2])
        fail("composite endpoints inconsistent");
    }

  for (int x = 0; x < num_objects_; ++x) {
    const int e = identity_[x];
    if (e < 0 || e >= static_cast<int>(m) || src_[e] != x || dst_[e] != x)
      fail("identity morphism has wrong endpoints");
    for (int g : from_[x])
      if (compose(g, e) != g) fail("right identity law fails");
    for (int g : to_[x])
      if (compose(e, g) != g) fail("left identity law fails");
  }

  for (int g1 = 0; g1 < static_cast<int>(m); ++g1)
    for (int g2 : from_[dst_[g1]])
      for (int g3 : from_[dst_[g2]])
        if (compose(compose(g3, g2), g1) != compose(g3, compose(g2, g1)))
          fail("associativity fails");

  inverse_.assign(m, -1);
  for (int g = 0; g < static_cast<int>(m); ++g) {
    for (int h : from_[dst_[g]]) {
      if (dst_[h] != src_[g]) continue;
      if (compose(h, g) == identity_[src_[g]] && compose(g, h) == identity_[dst_[g]]) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] < 0) fail("a morphism has no inverse");
  }

  component_.assign(num_objects_, -1);
  num_components_ = 0;
  for (int x = 0; x < num_objects_; ++x) {
    if (component_[x] >= 0) continue;
    const int c = num_components_++;
    component_rep_.push_back(x);
    std::deque<int> queue{x};
    component_[x] = c;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int g : from_[u]) {
        const int v = dst_[g];
        if (component_[v] < 0) {
          component_[v] = c;
          queue.push_back(v);
        }
      }
    }
  }
}

int Groupoid::compose(int g2, int g1) const {
  const int c = try_compose(g2, g1);
  if (c < 0)
    throw std::invalid_argument("groupoid: morphisms " + std::to_string(g2) + " and " +
                                std::to_string(g1) + " are not composable");
  return c;
}

std::vector<int> Groupoid::automorphisms_at(int x) const {
  std::vector<int> out{identity_[x]};
  for (int g : from_[x])
    if (dst_[g] == x && g != identity_[x]) out.push_back(g);
  return out;
}

std::vector<int> Groupoid::automorphisms() const {
  std::vector<int> out;
  for (int g = 0; g < num_morphisms(); ++g)
    if (src_[g] == dst_[g]) out.push_back(g);
  return out;
}

void for_each_composable(const Groupoid& g, int n,
                         const std::function<void(std::span<const int>)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_composable: negative length");
  if (n == 0) {
    for (int x = 0; x < g.num_objects(); ++x) {
      const int v = x;
      fn(std::span<const int>(&v, 1));
    }
    return;
  }
  std::vector<int> tuple(static_cast<std::size_t>(n));
  const std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      fn(std::span<const int>(tuple.data(), tuple.size()));
      return;
    }
    if (i == 0) {
      for (int m = 0; m < g.num_morphisms(); ++m) {
        tuple[0] = m;
        rec(1);
      }
    } else {
      for (int m : g.to(g.src(tuple[i - 1]))) {
        tuple[i] = m;
        rec(i + 1);
      }
    }
  };
  rec(0);
}

GroupoidFunctor::GroupoidFunctor(const Groupoid& s, const Groupoid& t,
                                 std::vector<int> omap, std::vector<int> mmap)
    : source(&s), target(&t), object_map(std::move(omap)), morphism_map(std::move(mmap)) {
  if (object_map.size() != static_cast<std::size_t>(s.num_objects()) ||
      morphism_map.size() != static_cast<std::size_t>(s.num_morphisms()))
    fail("functor: map size mismatch");
  for (int x : object_map)
    if (x < 0 || x >= t.num_objects()) fail("functor: object image out of range");
  for (int m : morphism_map)
    if (m < 0 || m >= t.num_morphisms()) fail("functor: morphism image out of range");
  for (int m = 0; m < s.num_morphisms(); ++m) {
    const int fm = morphism_map[m];
    if (t.src(fm) != object_map[s.src(m)] || t.dst(fm) != object_map[s.dst(m)])
      fail("functor: does not preserve endpoints");
  }
  for (int x = 0; x < s.num_objects(); ++x)
    if (morphism_map[s.identity_at(x)] != t.identity_at(object_map[x]))
      fail("functor: does not preserve identities");
  for (int g1 = 0; g1 < s.num_morphisms(); ++g1)
    for (int g2 : s.from(s.dst(g1)))
      if (morphism_map[s.compose(g2, g1)] !=
          t.compose(morphism_map[g2], morphism_map[g1]))
        fail("functor: does not preserve composition");
}

GroupoidFunctor GroupoidFunctor::identity(const Groupoid& g) {
  std::vector<int> omap(static_cast<std::size_t>(g.num_objects()));
  std::iota(omap.begin(), omap.end(), 0);
  std::vector<int> mmap(static_cast<std::size_t>(g.num_morphisms()));
  std::iota(mmap.begin(), mmap.end(), 0);
  return GroupoidFunctor(g, g, std::move(omap), std::move(mmap));
}

GroupoidFunctor GroupoidFunctor::compose(const GroupoidFunctor& outer,
                                         const GroupoidFunctor& inner) {
  if (inner.target != outer.source) fail("functor composition: middle groupoid mismatch");
  std::vector<int> omap(inner.object_map.size());
  for (std::size_t x = 0; x < omap.size(); ++x)
    omap[x] = outer.object_map[inner.object_map[x]];
  std::vector<int> mmap(inner.morphism_map.size());
  for (std::size_t m = 0; m < mmap.size(); ++m)
    mmap[m] = outer.morphism_map[inner.morphism_map[m]];
  return GroupoidFunctor(*inner.source, *outer.target, std::move(omap), std::move(mmap));
}

NaturalTransformation::NaturalTransformation(GroupoidFunctor f, GroupoidFunctor g,
                                             std::vector<int> comp)
    : from(std::move(f)), to(std::move(g)), component(std::move(comp)) {
  if (from.source != to.source || from.target != to.target)
    fail("natural transformation: functors are not parallel");
  const Groupoid& s = *from.source;
  const Groupoid& t = *from.target;
  if (component.size() != static_cast<std::size_t>(s.num_objects()))
    fail("natural transformation: one component per object required");
  for (int x = 0; x < s.num_objects(); ++x) {
    const int c = component[x];
    if (c < 0 || c >= t.num_morphisms() || t.src(c) != from.at_object(x) ||
        t.dst(c) != to.at_object(x))
      fail("natural transformation: component endpoints wrong");
  }
  for (int m = 0; m < s.num_morphisms(); ++m)
    if (t.compose(to.at_morphism(m), component[s.src(m)]) !=
        t.compose(component[s.dst(m)], from.at_morphism(m)))
      fail("natural transformation: naturality square fails");
}

Groupoid delooping(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> src(static_cast<std::size_t>(n), 0), dst(src);
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) table[static_cast<std::size_t>(h) * n + k] = g.mul(h, k);
  return Groupoid(1, std::move(src), std::move(dst), {0}, std::move(table));
}

Groupoid action_groupoid(const FiniteGroup& g, const std::vector<std::vector<int>>& act) {
  const int n = g.order();
  if (act.size() != static_cast<std::size_t>(n))
    fail("action: one permutation per group element required");
  const int pts = static_cast<int>(act[0].size());
  for (const auto& row : act) {
    if (row.size() != static_cast<std::size_t>(pts)) fail("action: ragged rows");
    for (int v : row)
      if (v < 0 || v >= pts) fail("action: image out of range");
  }
  for (int s = 0; s < pts; ++s)
    if (act[0][s] != s) fail("action: identity must act trivially");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int s = 0; s < pts; ++s)
        if (act[a][act[b][s]] != act[g.mul(a, b)][s]) fail("action: action law fails");

  const int m = pts * n;
  std::vector<int> src(static_cast<std::size_t>(m)), dst(static_cast<std::size_t>(m));
  std::vector<int> ident(static_cast<std::size_t>(pts));
  for (int s = 0; s < pts; ++s) {
    ident[s] = s * n;
    for (int a = 0; a < n; ++a) {
      src[static_cast<std::size_t>(s) * n + a] = s;
      dst[static_cast<std::size_t>(s) * n + a] = act[a][s];
    }
  }
  std::vector<std::int32_t> table(static_cast<std::size_t>(m) * m, -1);
  for (int s = 0; s < pts; ++s)
    for (int a = 0; a < n; ++a) {
      const int m1 = s * n + a;
      const int mid = act[a][s];
      for (int b = 0; b < n; ++b)
        table[static_cast<std::size_t>(mid * n + b) * m + m1] = s * n + g.mul(b, a);
    }
  return Groupoid(pts, std::move(src), std::move(dst), std::move(ident), std::move(table));
}

std::vector<std::vector<int>> conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<int>> act(static_cast<std::size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) {
    act[a].resize(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) act[a][x] = g.conj(a, x);
  }
  return act;
}

LoopGroupoid loop_groupoid(const Groupoid& base) {
  const std::vector<int> loops = base.automorphisms();
  const int nobj = static_cast<int>(loops.size());
  std::vector<int> loop_object(static_cast<std::size_t>(base.num_morphisms()), -1);
  for (int o = 0; o < nobj; ++o) loop_object[loops[o]] = o;

  // pos_in_from[g] = position of g in base.from(src(g)); from lists are
  // ascending so composite lookups below stay O(log).
  std::vector<int> pos_in_from(static_cast<std::size_t>(base.num_morphisms()));
  for (int x = 0; x < base.num_objects(); ++x) {
    const auto& lst = base.from(x);
    for (int k = 0; k < static_cast<int>(lst.size()); ++k) pos_in_from[lst[k]] = k;
  }

  std::vector<int> offset(static_cast<std::size_t>(nobj) + 1, 0);
  for (int o = 0; o < nobj; ++o)
    offset[o + 1] = offset[o] + base.out_degree(base.src(loops[o]));
  const int nmor = offset[nobj];

  std::vector<int> src(static_cast<std::size_t>(nmor)), dst(static_cast<std::size_t>(nmor));
  std::vector<int> morphism_g(static_cast<std::size_t>(nmor));
  std::vector<int> ident(static_cast<std::size_t>(nobj));
  for (int o = 0; o < nobj; ++o) {
    const int gamma = loops[o];
    const int x = base.src(gamma);
    const auto& out = base.from(x);
    for (int k = 0; k < static_cast<int>(out.size()); ++k) {
      const int g = out[k];
      const int id = offset[o] + k;
      src[id] = o;
      morphism_g[id] = g;
      const int conj = base.compose(g, base.compose(gamma, base.inverse(g)));
      dst[id] = loop_object[conj];
    }
    ident[o] = offset[o] + pos_in_from[base.identity_at(x)];
  }

  std::vector<std::int32_t> table(static_cast<std::size_t>(nmor) * nmor, -1);
  for (int m1 = 0; m1 < nmor; ++m1) {
    const int o1 = src[m1];
    const int d = dst[m1];
    for (int k = offset[d]; k < offset[d + 1]; ++k) {
      const int comp = base.compose(morphism_g[k], morphism_g[m1]);
      table[static_cast<std::size_t>(k) * nmor + m1] = offset[o1] + pos_in_from[comp];
    }
  }

  LoopGroupoid out{Groupoid(nobj, std::move(src), std::move(dst), std::move(ident),
                            std::move(table)),
                   &base, std::move(loops), std::move(morphism_g), std::move(loop_object)};
  return out;
}

int LoopGroupoid::morphism_id(int object, int g) const {
  const auto& slice = gpd.from(object);
  auto it = std::lower_bound(slice.begin(), slice.end(), g,
                             [&](int id, int key) { return morphism_g[id] < key; });
  if (it == slice.end() || morphism_g[*it] != g)
    throw std::invalid_argument("loop groupoid: no morphism with that underlying g");
  return *it;
}

AutomorphismGroup automorphism_group(const Groupoid& g, int x) {
  const std::vector<int> autos = g.automorphisms_at(x);
  const int n = static_cast<int>(autos.size());
  std::vector<int> pos(static_cast<std::size_t>(g.num_morphisms()), -1);
  for (int i = 0; i < n; ++i) pos[autos[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = pos[g.compose(autos[i], autos[j])];
  return AutomorphismGroup{FiniteGroup("aut:" + std::to_string(x), std::move(table)),
                           std::move(autos)};
}

RetractionData default_retraction_data(const Groupoid& g) {
  RetractionData data;
  data.basepoint.assign(static_cast<std::size_t>(g.num_objects()), -1);
  data.to_basepoint.assign(static_cast<std::size_t>(g.num_objects()), -1);
  for (int b : g.component_representatives()) {
    data.basepoint[b] = b;
    data.to_basepoint[b] = g.identity_at(b);
    std::deque<int> queue{b};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int m : g.from(u)) {
        const int v = g.dst(m);
        if (data.basepoint[v] >= 0) continue;
        data.basepoint[v] = b;
        // m : u -> v, so v -> b factors as (u -> b) after m^-1.
        data.to_basepoint[v] = g.compose(data.to_basepoint[u], g.inverse(m));
        queue.push_back(v);
      }
    }
  }
  return data;
}

RetractionData random_retraction_data(const Groupoid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RetractionData data;
  data.basepoint.assign(static_cast<std::size_t>(g.num_objects()), -1);
  data.to_basepoint.assign(static_cast<std::size_t>(g.num_objects()), -1);
  for (int c = 0; c < g.num_components(); ++c) {
    std::vector<int> members;
    for (int x = 0; x < g.num_objects(); ++x)
      if (g.components()[x] == c) members.push_back(x);
    const int b = members[std::uniform_int_distribution<std::size_t>(
        0, members.size() - 1)(rng)];
    for (int y : members) {
      data.basepoint[y] = b;
      if (y == b) {
        data.to_basepoint[y] = g.identity_at(b);
        continue;
      }
      std::vector<int> candidates;
      for (int m : g.from(y))
        if (g.dst(m) == b) candidates.push_back(m);
      data.to_basepoint[y] = candidates[std::uniform_int_distribution<std::size_t>(
          0, candidates.size() - 1)(rng)];
    }
  }
  return data;
}

Retraction retraction(const Groupoid& g, const RetractionData& data) {
  if (data.basepoint.size() != static_cast<std::size_t>(g.num_objects()) ||
      data.to_basepoint.size() != static_cast<std::size_t>(g.num_objects()))
    fail("retraction: data size mismatch");
  for (int y = 0; y < g.num_objects(); ++y) {
    const int b = data.basepoint[y];
    const int f = data.to_basepoint[y];
    if (b < 0 || b >= g.num_objects() || g.components()[b] != g.components()[y])
      fail("retraction: basepoint outside the component");
    if (data.basepoint[b] != b) fail("retraction: basepoint must be its own basepoint");
    if (f < 0 || f >= g.num_morphisms() || g.src(f) != y || g.dst(f) != b)
      fail("retraction: connecting morphism has wrong endpoints");
    if (y == b && f != g.identity_at(b))
      fail("retraction: basepoint must connect via its identity");
  }

  std::vector<int> bases;
  for (int x = 0; x < g.num_objects(); ++x)
    if (data.basepoint[x] == x) bases.push_back(x);
  std::vector<int> base_index(static_cast<std::size_t>(g.num_objects()), -1);
  for (int i = 0; i < static_cast<int>(bases.size()); ++i) base_index[bases[i]] = i;

  std::vector<int> mor_to_parent;
  std::vector<int> mor_index(static_cast<std::size_t>(g.num_morphisms()), -1);
  std::vector<int> usrc, udst, uident(bases.size());
  for (int i = 0; i < static_cast<int>(bases.size()); ++i) {
    const int b = bases[i];
    for (int m : g.from(b)) {
      if (g.dst(m) != b) continue;
      mor_index[m] = static_cast<int>(mor_to_parent.size());
      mor_to_parent.push_back(m);
      usrc.push_back(i);
      udst.push_back(i);
      if (m == g.identity_at(b)) uident[i] = mor_index[m];
    }
  }
  const int um = static_cast<int>(mor_to_parent.size());
  std::vector<std::int32_t> utable(static_cast<std::size_t>(um) * um, -1);
  for (int a = 0; a < um; ++a)
    for (int b = 0; b < um; ++b) {
      if (usrc[a] != usrc[b]) continue;
      utable[static_cast<std::size_t>(a) * um + b] =
          mor_index[g.compose(mor_to_parent[a], mor_to_parent[b])];
    }

  auto aut_union = std::make_unique<Groupoid>(static_cast<int>(bases.size()),
                                              std::move(usrc), std::move(udst),
                                              std::move(uident), std::move(utable));

  std::vector<int> r_obj(static_cast<std::size_t>(g.num_objects()));
  for (int y = 0; y < g.num_objects(); ++y) r_obj[y] = base_index[data.basepoint[y]];
  std::vector<int> r_mor(static_cast<std::size_t>(g.num_morphisms()));
  for (int m = 0; m < g.num_morphisms(); ++m) {
    const int y = g.src(m), z = g.dst(m);
    const int image = g.compose(data.to_basepoint[z],
                                g.compose(m, g.inverse(data.to_basepoint[y])));
    r_mor[m] = mor_index[image];
    if (r_mor[m] < 0) fail("retraction: image not an automorphism of the basepoint");
  }
  GroupoidFunctor r(g, *aut_union, std::move(r_obj), std::move(r_mor));
  GroupoidFunctor i(*aut_union, g, bases, mor_to_parent);
  GroupoidFunctor ir = GroupoidFunctor::compose(i, r);

  const GroupoidFunctor ri = GroupoidFunctor::compose(r, i);
  const GroupoidFunctor uid = GroupoidFunctor::identity(*aut_union);
  if (ri.object_map != uid.object_map || ri.morphism_map != uid.morphism_map)
    throw std::logic_error("retraction: r after i is not the identity");

  NaturalTransformation t(GroupoidFunctor::identity(g), ir, data.to_basepoint);
  return Retraction{std::move(aut_union), std::move(bases), std::move(mor_to_parent),
                    std::move(r), std::move(i), std::move(ir), std::move(t)};
}

Groupoid disjoint_union(const std::vector<const Groupoid*>& parts) {
  int nobj = 0, nmor = 0;
  for (const Groupoid* p : parts) {
    nobj += p->num_objects();
    nmor += p->num_morphisms();
  }
  if (nobj == 0) fail("disjoint union: empty");
  std::vector<int> src, dst, ident;
  src.reserve(nmor);
  dst.reserve(nmor);
  std::vector<std::int32_t> table(static_cast<std::size_t>(nmor) * nmor, -1);
  int obj_off = 0, mor_off = 0;
  for (const Groupoid* p : parts) {
    for (int m = 0; m < p->num_morphisms(); ++m) {
      src.push_back(p->src(m) + obj_off);
      dst.push_back(p->dst(m) + obj_off);
    }
    for (int x = 0; x < p->num_objects(); ++x)
      ident.push_back(p->identity_at(x) + mor_off);
    for (int a = 0; a < p->num_morphisms(); ++a)
      for (int b = 0; b < p->num_morphisms(); ++b) {
        const int c = p->try_compose(a, b);
        if (c >= 0)
          table[static_cast<std::size_t>(a + mor_off) * nmor + (b + mor_off)] =
              c + mor_off;
      }
    obj_off += p->num_objects();
    mor_off += p->num_morphisms();
  }
  return Groupoid(nobj, std::move(src), std::move(dst), std::move(ident), std::move(table));
}

Subgroupoid full_subgroupoid(const Groupoid& g, const std::vector<int>& objects) {
  std::vector<int> obj_index(static_cast<std::size_t>(g.num_objects()), -1);
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
    const int x = objects[i];
    if (x < 0 || x >= g.num_objects() || obj_index[x] >= 0)
      fail("subgroupoid: object list invalid");
    obj_index[x] = i;
  }
  std::vector<int> mor_to_parent;
  std::vector<int> mor_index(static_cast<std::size_t>(g.num_morphisms()), -1);
  std::vector<int> src, dst, ident(objects.size());
  for (int m = 0; m < g.num_morphisms(); ++m) {
    if (obj_index[g.src(m)] < 0 || obj_index[g.dst(m)] < 0) continue;
    mor_index[m] = static_cast<int>(mor_to_parent.size());
    mor_to_parent.push_back(m);
    src.push_back(obj_index[g.src(m)]);
    dst.push_back(obj_index[g.dst(m)]);
  }
  for (std::size_t i = 0; i < objects.size(); ++i)
    ident[i] = mor_index[g.identity_at(objects[i])];
  const int nm = static_cast<int>(mor_to_parent.size());
  std::vector<std::int32_t> table(static_cast<std::size_t>(nm) * nm, -1);
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) {
      const int c = g.try_compose(mor_to_parent[a], mor_to_parent[b]);
      if (c >= 0) table[static_cast<std::size_t>(a) * nm + b] = mor_index[c];
    }
  auto sub = std::make_unique<Groupoid>(static_cast<int>(objects.size()), std::move(src),
                                        std::move(dst), std::move(ident), std::move(table));
  return Subgroupoid{std::move(sub), objects, std::move(mor_to_parent)};
}

}  // namespace qdouble
