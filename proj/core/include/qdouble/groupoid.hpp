#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "qdouble/group.hpp"

namespace qdouble {

/// A finite groupoid: objects 0..num_objects-1, morphisms 0..num_morphisms-1
/// with source and target objects, a dense composition table, identities and
/// inverses.  compose(g2, g1) is "g2 after g1" and is defined exactly when
/// dst(g1) == src(g2).  Construction validates all axioms exhaustively.
///
/// The factories in this header enumerate morphisms grouped by source
/// object; from(x) and to(x) are ascending in any case.
class Groupoid {
 public:
  /// table[g2 * m + g1] is the id of g2 after g1, or -1 when the pair is not
  /// composable.  identities[x] is the identity morphism at object x.
  Groupoid(int num_objects, std::vector<int> src, std::vector<int> dst,
           std::vector<int> identities, std::vector<std::int32_t> table);

  int num_objects() const { return num_objects_; }
  int num_morphisms() const { return static_cast<int>(src_.size()); }
  int src(int m) const { return src_[m]; }
  int dst(int m) const { return dst_[m]; }
  int identity_at(int x) const { return identity_[x]; }
  bool is_identity(int m) const { return identity_[src_[m]] == m; }
  int inverse(int m) const { return inverse_[m]; }

  /// -1 when not composable.
  int try_compose(int g2, int g1) const {
    return table_[static_cast<std::size_t>(g2) * src_.size() + g1];
  }
  int compose(int g2, int g1) const;

  /// Morphism ids with source x, ascending.
  const std::vector<int>& from(int x) const { return from_[x]; }
  /// Morphism ids with target x, ascending.
  const std::vector<int>& to(int x) const { return to_[x]; }
  int out_degree(int x) const { return static_cast<int>(from_[x].size()); }

  /// Automorphism morphism ids at x (src == dst == x), identity first, then
  /// ascending.
  std::vector<int> automorphisms_at(int x) const;
  /// All automorphism morphism ids, ascending.
  std::vector<int> automorphisms() const;

  /// Connected components: components()[x] is the component index of object
  /// x; components are numbered by their least object, ascending.
  const std::vector<int>& components() const { return component_; }
  int num_components() const { return num_components_; }
  /// Least object of each component.
  const std::vector<int>& component_representatives() const { return component_rep_; }

 private:
  int num_objects_;
  std::vector<int> src_, dst_, identity_, inverse_;
  std::vector<std::int32_t> table_;
  std::vector<std::vector<int>> from_, to_;
  std::vector<int> component_, component_rep_;
  int num_components_;
};

/// Composable n-tuples (t[0], ..., t[n-1]) listed as written left to right:
/// t[n-1] is applied first and src(t[i]) == dst(t[i+1]).  Tuples are visited
/// in lexicographic order of the id vector.  n == 0 visits one empty tuple
/// per object (the tuple then carries the object id).
void for_each_composable(const Groupoid& g, int n,
                         const std::function<void(std::span<const int>)>& fn);

/// A functor between groupoids given by its object and morphism maps.
/// Construction validates preservation of src, dst, identities and
/// composition.
struct GroupoidFunctor {
  const Groupoid* source;
  const Groupoid* target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;

  GroupoidFunctor(const Groupoid& s, const Groupoid& t, std::vector<int> omap,
                  std::vector<int> mmap);

  int at_object(int x) const { return object_map[x]; }
  int at_morphism(int m) const { return morphism_map[m]; }

  static GroupoidFunctor identity(const Groupoid& g);
  static GroupoidFunctor compose(const GroupoidFunctor& outer, const GroupoidFunctor& inner);
};

/// A natural transformation between parallel functors F, G : S -> T:
/// component[x] : F(x) -> G(x) in T with G(m) after component[src m] equal
/// to component[dst m] after F(m) for every morphism m.  Construction
/// validates naturality exhaustively.
struct NaturalTransformation {
  GroupoidFunctor from;
  GroupoidFunctor to;
  std::vector<int> component;

  NaturalTransformation(GroupoidFunctor f, GroupoidFunctor g, std::vector<int> comp);

  int at(int x) const { return component[x]; }
};

/// One-object groupoid with morphism i = group element i.
Groupoid delooping(const FiniteGroup& g);

/// Action groupoid of a left action: act[g][s] is g.s.  Objects are the
/// points; the morphisms are the pairs (g, s) : s -> g.s enumerated
/// point-major (id = s * |G| + g).  Validates the action axioms.
Groupoid action_groupoid(const FiniteGroup& g, const std::vector<std::vector<int>>& act);

/// The conjugation action of a group on itself, act[g][x] = g x g^-1.
std::vector<std::vector<int>> conjugation_action(const FiniteGroup& g);

/// The loop groupoid of a base groupoid.  Objects are the automorphisms
/// ("loops") of the base, ordered by morphism id; a morphism with underlying
/// base morphism g and source loop c (composable: src(g) == src(c)) points
/// to the conjugate loop g c g^-1.  Morphisms are enumerated object-major,
/// then by g ascending.
struct LoopGroupoid {
  Groupoid gpd;
  const Groupoid* base;
  std::vector<int> object_loop;  // loop object -> base automorphism id
  std::vector<int> morphism_g;   // loop morphism -> base morphism id
  std::vector<int> loop_object;  // base morphism id -> loop object or -1

  /// Loop morphism id with source object `object` and underlying base
  /// morphism g.
  int morphism_id(int object, int g) const;
};

LoopGroupoid loop_groupoid(const Groupoid& base);

/// Automorphism group of an object, with the labeling vector mapping group
/// element i to a morphism id (identity element 0 maps to the identity
/// morphism).
struct AutomorphismGroup {
  FiniteGroup group;
  std::vector<int> morphism_of;
};
AutomorphismGroup automorphism_group(const Groupoid& g, int x);

/// A choice, for every object y, of a basepoint in its component and of a
/// morphism to_basepoint[y] : y -> basepoint[y] (the identity at the
/// basepoint itself).
struct RetractionData {
  std::vector<int> basepoint;
  std::vector<int> to_basepoint;
};

/// Basepoint = least object of the component, to_basepoint along a breadth
/// first search tree.
RetractionData default_retraction_data(const Groupoid& g);
/// Random basepoints and random connecting morphisms, deterministic in seed.
RetractionData random_retraction_data(const Groupoid& g, std::uint64_t seed);

/// Deformation retraction of a groupoid onto the disjoint union of the
/// automorphism groups at the chosen basepoints:
///   r(g : y -> z) = to_basepoint[z] . g . to_basepoint[y]^-1,
///   i the inclusion, with r after i the identity (checked exactly) and
///   t : Id => i after r the natural transformation with components
///   to_basepoint[y].
struct Retraction {
  std::unique_ptr<Groupoid> aut_union;
  std::vector<int> object_to_parent;    // aut_union object -> parent object
  std::vector<int> morphism_to_parent;  // aut_union morphism -> parent morphism
  GroupoidFunctor r;   // parent -> aut_union
  GroupoidFunctor i;   // aut_union -> parent
  GroupoidFunctor ir;  // i after r, endofunctor of the parent
  NaturalTransformation t;  // Id => ir
};

Retraction retraction(const Groupoid& g, const RetractionData& data);

/// Disjoint union; objects and morphisms of the parts are renumbered in
/// order.
Groupoid disjoint_union(const std::vector<const Groupoid*>& parts);

/// The full subgroupoid on a subset of objects (all morphisms between them),
/// with its renumbering back into the parent.  The parent maps are valid
/// object_map/morphism_map data for an inclusion GroupoidFunctor.
struct Subgroupoid {
  std::unique_ptr<Groupoid> gpd;
  std::vector<int> object_to_parent;
  std::vector<int> morphism_to_parent;
};
Subgroupoid full_subgroupoid(const Groupoid& g, const std::vector<int>& objects);

}  // namespace qdouble
