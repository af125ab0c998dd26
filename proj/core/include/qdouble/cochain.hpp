#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qdouble/groupoid.hpp"
#include "qdouble/phase.hpp"

namespace qdouble {

/// A degree-n assignment of exact phases to the composable n-tuples of a
/// groupoid.  A tuple (t[0], ..., t[n-1]) is listed as written left to
/// right: t[n-1] is applied first, and the tuple composes to
/// t[0] . t[1] . ... . t[n-1].  Degree-0 cochains are keyed by object id
/// (pass a 1-element span holding the object).
///
/// A cochain is "normalized" when it is trivial on every tuple containing
/// an identity morphism; the flag is computed at construction.
class Cochain {
 public:
  /// Tabulates f over all composable n-tuples.  Degree is capped at 4 and
  /// the groupoid at 65536 morphisms to keep keys packable.
  Cochain(const Groupoid& base, int degree,
          const std::function<Phase(std::span<const int>)>& f);

  static Cochain trivial(const Groupoid& base, int degree);

  const Groupoid& base() const { return *base_; }
  int degree() const { return degree_; }
  bool normalized() const { return normalized_; }
  std::size_t size() const { return values_.size(); }

  /// Value on a composable tuple (degree 0: on an object).  Throws when the
  /// tuple is not composable / not in the table.
  Phase operator()(std::span<const int> tuple) const;
  Phase operator()(std::initializer_list<int> tuple) const {
    return (*this)(std::span<const int>(tuple.begin(), tuple.size()));
  }

  /// The standard alternating face product (dc)(s) = prod_i c(face_i s)^{(-1)^i}:
  /// face 0 drops the first-applied morphism, face i merges the adjacent
  /// pair at i, the top face drops the last-applied morphism.  For a
  /// 0-cochain c the value on [g] is c(dst g) / c(src g); for a 1-cochain,
  /// (dc)([g|h]) = c(g) c(gh)^-1 c(h).
  Cochain coboundary() const;

  /// Exhaustively checks that the coboundary is trivial.
  bool is_cocycle() const;
  /// First composable (degree+1)-tuple on which the coboundary is
  /// nontrivial, in lexicographic enumeration order.
  std::optional<std::vector<int>> first_violation() const;

  /// Pointwise product / ratio of cochains on the same groupoid and degree.
  Cochain operator*(const Cochain& o) const;
  Cochain operator/(const Cochain& o) const;

  bool same_values(const Cochain& o) const;

 private:
  Cochain(const Groupoid& base, int degree);
  static std::uint64_t pack(std::span<const int> tuple);
  Phase eval_coboundary(std::span<const int> tuple) const;

  const Groupoid* base_;
  int degree_;
  bool normalized_;
  std::unordered_map<std::uint64_t, Phase> values_;
};

/// Value of f on the tuple image (f(t[0]), ..., f(t[n-1])); degree 0 maps
/// objects.
Cochain pullback(const GroupoidFunctor& f, const Cochain& c);

/// Loop transgression: for a cocycle c of degree n >= 1 on the base of
/// `loop`, the degree n-1 cochain on the loop groupoid
///   tau(c)([g_{n-1}|...|g_1] gamma) =
///     prod_{i=0}^{n-1} c([g_{n-1}|...|g_{i+1}| l_i |g_i|...|g_1])^{(-1)^{n-1-i}},
/// where l_i = (g_i...g_1) gamma (g_i...g_1)^{-1} is the transported loop.
/// The output is verified to be a cocycle and inherits normalization.
/// Throws when c is not a cocycle.
Cochain transgress(const Cochain& c, const LoopGroupoid& loop);

/// Pointed transgression at a group element x, for a cocycle on a
/// delooping.  Produces a cochain on the delooping of the centralizer C_x:
///   degree 2: (tau_x theta)(g)    = theta(g,x) / theta(x,g)
///   degree 3: (tau_x omega)(h,g)  = omega(h,g,x) omega(x,h,g) / omega(h,x,g)
/// Only degrees 2 and 3 are supported.
struct PointedTransgression {
  FiniteGroup group;           // the centralizer C_x
  std::vector<int> embedding;  // C_x index -> parent element
  std::unique_ptr<Groupoid> dl;
  Cochain cochain;
};
PointedTransgression transgress_at(const FiniteGroup& g, const Cochain& c, int x);

/// The comparison cochain for two isomorphic functors k, k2 with a natural
/// transformation t : k => k2 and a 2-cocycle theta on their target:
///   eps(g : x0 -> x1) = theta([t(x1)|k(g)]) / theta([k2(g)|t(x0)]).
/// Before returning, verifies exhaustively that
///   pullback(k, theta) = coboundary(eps) * pullback(k2, theta)
/// and throws std::logic_error otherwise.
Cochain epsilon_correction(const GroupoidFunctor& k, const GroupoidFunctor& k2,
                           const NaturalTransformation& t, const Cochain& theta);

/// base * coboundary(b) for a seeded random normalized (n-1)-cochain b with
/// denominators dividing 24; always a cocycle, normalized whenever base is
/// (or omitted).  Deterministic in seed.
Cochain random_cocycle(const Groupoid& g, int degree, std::uint64_t seed,
                       const Cochain* base = nullptr);

}  // namespace qdouble
