#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qdouble/cochain.hpp"
#include "qdouble/cyclotomic.hpp"
#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"

namespace qdouble {

/// The twisted groupoid algebra: basis <g> over the morphisms of a
/// groupoid, with product
///   <g2><g1> = 0                          when dst(g1) != src(g2),
///   <g2><g1> = theta([g2|g1]) <g2.g1>     otherwise,
/// and unit sum_x <Id_x>.  The twist must be a normalized 2-cocycle;
/// associativity and the unit laws are verified exactly at construction.
class TwistedAlgebra {
 public:
  TwistedAlgebra(const Groupoid& base, Cochain twist);

  const Groupoid& base() const { return *base_; }
  const Cochain& twist() const { return twist_; }
  int dim() const { return base_->num_morphisms(); }

  /// Structure constants: nullopt when the product is zero.
  std::optional<std::pair<int, Phase>> product(int g2, int g1) const;

  /// <g>* = theta(g, g^-1)^-1 <g^-1>; the star making the regular
  /// representation unitary (right multiplication by <g>* is the adjoint of
  /// right multiplication by <g>).
  std::pair<int, Phase> star(int g) const;

  /// Exact dimension of the center.  The commutation constraints pair
  /// basis coefficients two at a time (z_{k g^-1} theta(k g^-1, g) =
  /// z_{g^-1 k} theta(g, g^-1 k), or force single coefficients to zero), so
  /// the exact solve is a phase-weighted union-find over the basis.
  int center_dimension() const;

 private:
  const Groupoid* base_;
  Cochain twist_;
};

/// A finite-dimensional module over a TwistedAlgebra, stored as one complex
/// matrix per basis morphism.  validate() checks the product law
/// rho(<g2>) rho(<g1>) = theta(g2,g1) rho(<g2.g1>) (zero when not
/// composable) within tolerance, and that the object grading recovered from
/// the idempotents <Id_x> fills out the dimension.
struct AlgebraRep {
  const TwistedAlgebra* algebra;
  int dim;
  std::vector<Eigen::MatrixXcd> mat;  // indexed by morphism id

  void validate(double tol = 1e-9) const;
  /// Per-object sub-dimension: rank of rho(<Id_x>), read off its trace.
  std::vector<int> grading() const;
  /// Direct sum, blockwise.
  static AlgebraRep direct_sum(const std::vector<const AlgebraRep*>& parts);
};

/// Left regular representation: entries are single exact phases (rendered
/// as complex numbers).
AlgebraRep regular_representation(const TwistedAlgebra& a);

/// Shared context for character computations: the loop groupoid of the
/// algebra base and the transgressed twist on it.
struct CharacterContext {
  const TwistedAlgebra* algebra;
  std::unique_ptr<LoopGroupoid> loop;
  Cochain tau;
};
CharacterContext make_character_context(const TwistedAlgebra& a);

/// chi(gamma) = Tr rho(<gamma>) over the automorphisms gamma of the base.
/// The conjugation ("section") property
///   chi(h gamma h^-1) = tau(theta)([h] gamma) * chi(gamma)
/// is verified within 1e-9 before the character is returned.
struct TwistedCharacter {
  const TwistedAlgebra* algebra;
  std::map<int, std::complex<double>> values;  // automorphism id -> trace
};
TwistedCharacter character(const AlgebraRep& r, const CharacterContext& ctx);

/// Integral over the loop groupoid of conj(c1) * c2: the sum over
/// automorphisms gamma of conj(c1(gamma)) c2(gamma) / #(morphisms of the
/// base out of src gamma).
std::complex<double> char_inner_product(const TwistedCharacter& c1,
                                        const TwistedCharacter& c2);

/// Dimension of the intertwiner space Hom(r1, r2), by the numeric null
/// space of rho2(g) X - X rho1(g); asserted to match the rounded character
/// inner product <chi_{r1}, chi_{r2}>.
int rep_hom_dimension(const AlgebraRep& r1, const AlgebraRep& r2,
                      const CharacterContext& ctx);

/// Numerical Wedderburn decomposition of the left regular module.
/// Deterministic in seed; draws a seeded random self-adjoint element of the
/// commutant (a combination of right multiplications), splits into its
/// eigenspaces, and groups eigenspaces into isotypic classes by comparing
/// traces of all basis actions (tolerance 1e-6).  Eigenvalue gaps below the
/// 1e-8 floor trigger a redraw, at most 8 times.  The irreducible count is
/// asserted to equal the exact center dimension and the dimensions to
/// satisfy sum d_i^2 = dim.  Irreps are sorted by dimension, then by
/// lexicographically smallest character vector.
struct Decomposition {
  std::vector<AlgebraRep> irreps;
  std::vector<int> multiplicities;  // multiplicity in the regular module
  int center_dimension;
};
Decomposition decompose(const TwistedAlgebra& a, std::uint64_t seed);

/// The twisted Drinfeld double: the twisted groupoid algebra of the loop
/// groupoid of the delooping of g, twisted by the transgression of omega.
/// Construction additionally evaluates the closed-form product
///   <h <- y> <g <- x> = delta_{y, g x g^-1} *
///     omega(h,g,x) omega(h g x (hg)^-1, h, g) / omega(h, g x g^-1, g)
///     * <hg <- x>
/// on every basis pair and requires exact agreement with the generic
/// structure table.
struct DrinfeldDouble {
  std::unique_ptr<LoopGroupoid> loop;
  TwistedAlgebra algebra;
};
DrinfeldDouble drinfeld_double(const FiniteGroup& g, const Cochain& omega);

/// #{irreducible theta-twisted representations} as the exact integral of
/// the twice-transgressed twist over the double loop groupoid.
int count_irreps(const Groupoid& g, const Cochain& theta);

/// The group-level closed form (1/|G|) sum_{xg=gx} theta(x,g)/theta(g,x),
/// evaluated exactly.
int group_count_formula(const FiniteGroup& g, const Cochain& theta);

/// rank Rep(D^omega(G)) two ways: the commuting-triple sum
///   (1/|G|) sum omega(h,x,g) omega(g,h,x) omega(x,g,h)
///           / [omega(h,g,x) omega(x,h,g) omega(g,x,h)]
/// and the exact integral of the triple transgression over the triple loop
/// groupoid; asserted equal.
int double_rank_formula(const FiniteGroup& g, const Cochain& omega);

/// Exact solution space of s(dst f) = alpha(f) s(src f): dimension and a
/// basis (one vector per component carrying a consistent section).  The
/// dimension is asserted to equal the exact integral of the transgression
/// of alpha over the loop groupoid.
struct FlatSections {
  int dimension;
  std::vector<Eigen::VectorXcd> basis;  // indexed by object
};
FlatSections flat_sections(const Cochain& alpha, const Groupoid& g);

/// The automorphism-group algebra at an object: the delooping of Aut(x)
/// with the restricted twist theta(a, b) for automorphisms a, b at x.
struct AutAlgebra {
  AutomorphismGroup aut;
  std::unique_ptr<Groupoid> dl;
  TwistedAlgebra algebra;
};
AutAlgebra aut_algebra(const TwistedAlgebra& a, int object);

/// Induction up from the basepoint automorphism algebra along retraction
/// data, for a connected base:
///   F(g : y -> z) = theta([f_z|g]) / theta([f_z g f_y^-1|f_y])
///                   * rho(f_z . g . f_y^-1)
/// placed as the (z, y) block.  rho must be a representation of
/// aut_algebra(a, basepoint) in its element order.  The result satisfies
/// the AlgebraRep invariant, and its self-hom dimension is asserted equal
/// to rho's (irreducibility is preserved).
AlgebraRep dpr_induce(const TwistedAlgebra& a, const RetractionData& data,
                      const AlgebraRep& rho);

/// Extends a representation of the full subalgebra on one component by
/// zero to the whole algebra (sub must come from full_subgroupoid of the
/// base of `full`, and sub_rep's algebra twist must be the restriction).
AlgebraRep extend_by_zero(const TwistedAlgebra& full, const Subgroupoid& sub,
                          const AlgebraRep& sub_rep);

/// Precomputed data for elliptic character checks on a group double: the
/// loop groupoid, its transgressed twist, the double loop groupoid and the
/// twice-transgressed twist.  Construction asserts, for every h and every
/// commuting pair (g, x), that the transgression route
/// tau^2(omega)([h](g,x)) equals the closed-form ratio
///   omega(h,x,g) omega(hgh^-1,h,x) omega(hxh^-1,hgh^-1,h)
///   / [omega(h,g,x) omega(hxh^-1,h,g) omega(hgh^-1,hxh^-1,h)]
/// exactly as phases.
struct EllipticContext {
  const FiniteGroup* group;
  const Cochain* omega;
  std::unique_ptr<LoopGroupoid> loop;
  Cochain tau;
  std::unique_ptr<LoopGroupoid> loop2;
  Cochain tau2;

  /// The verified conjugation ratio for (h, g, x), g and x commuting.
  Phase ratio(int h, int g, int x) const;
};
EllipticContext make_elliptic_context(const FiniteGroup& g, const Cochain& omega);

/// Checks chi(h x h^-1, h g h^-1) = ratio(h,g,x) * chi(x,g) for all h in G
/// and all commuting pairs, in sup norm.  chi maps commuting pairs keyed
/// {x, g} (x the object, g the loop direction) to complex values; missing
/// pairs read as zero.
struct EllipticCheck {
  bool passed;
  double worst_residual;
};
EllipticCheck elliptic_character_check(
    const EllipticContext& ctx,
    const std::map<std::pair<int, int>, std::complex<double>>& chi,
    double tolerance = 1e-9);

}  // namespace qdouble
