#include "qdouble/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "detail.hpp"

namespace qdouble {

using detail::phase_c;
using detail::require_delooping_of;
using detail::sup_abs;

namespace {

// Union-find over basis indices where each element carries the phase
// relating its coefficient to the root's: z_i = weight(i) * z_root, and a
// root can be marked dead (all coefficients in the class forced to zero).
class PhasedUnionFind {
 public:
  explicit PhasedUnionFind(int n)
      : parent_(n), weight_(n, Phase::one()), dead_(n, false) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int i) {
    if (parent_[i] == i) return i;
    const int root = find(parent_[i]);
    weight_[i] = weight_[i] * weight_[parent_[i]];
    parent_[i] = root;
    return root;
  }

  // Impose z_a = phi * z_b.
  void relate(int a, int b, const Phase& phi) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) {
      if (weight_[a] != phi * weight_[b]) dead_[ra] = true;
      return;
    }
    // z_rb = weight(b)^-1 z_b = weight(b)^-1 phi^-1 z_a
    //      = (weight(a) / (phi weight(b))) z_ra.
    parent_[rb] = ra;
    weight_[rb] = weight_[a] / (phi * weight_[b]);
    dead_[ra] = dead_[ra] || dead_[rb];
  }

  void kill(int i) { dead_[find(i)] = true; }

  int live_classes() {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      if (find(i) == i && !dead_[i]) ++count;
    }
    return count;
  }

 private:
  std::vector<int> parent_;
  std::vector<Phase> weight_;
  std::vector<bool> dead_;
};

}  // namespace

TwistedAlgebra::TwistedAlgebra(const Groupoid& base, Cochain twist)
    : base_(&base), twist_(std::move(twist)) {
  if (&twist_.base() != base_) {
    throw std::invalid_argument("TwistedAlgebra: twist lives on a different groupoid");
  }
  if (twist_.degree() != 2) {
    throw std::invalid_argument("TwistedAlgebra: twist must have degree 2");
  }
  if (!twist_.normalized()) {
    throw std::invalid_argument("TwistedAlgebra: twist must be normalized");
  }
  if (!twist_.is_cocycle()) {
    throw std::invalid_argument("TwistedAlgebra: twist must be a cocycle");
  }
  // Associativity of the basis product, exactly:
  //   theta(g3,g2) theta(g3.g2, g1) == theta(g2,g1) theta(g3, g2.g1).
  const int m = base_->num_morphisms();
  for (int g3 = 0; g3 < m; ++g3) {
    for (int g2 : base_->to(base_->src(g3))) {
      const int g32 = base_->compose(g3, g2);
      for (int g1 : base_->to(base_->src(g2))) {
        const int g21 = base_->compose(g2, g1);
        if (twist_({g3, g2}) * twist_({g32, g1}) !=
            twist_({g2, g1}) * twist_({g3, g21})) {
          throw std::logic_error("TwistedAlgebra: product is not associative");
        }
      }
    }
  }
  // Unit law for sum_x <Id_x>, exactly (normalization makes these 1).
  for (int g = 0; g < m; ++g) {
    if (!twist_({g, base_->identity_at(base_->src(g))}).is_one() ||
        !twist_({base_->identity_at(base_->dst(g)), g}).is_one()) {
      throw std::logic_error("TwistedAlgebra: unit law fails");
    }
  }
}

std::optional<std::pair<int, Phase>> TwistedAlgebra::product(int g2, int g1) const {
  const int c = base_->try_compose(g2, g1);
  if (c < 0) return std::nullopt;
  return std::make_pair(c, twist_({g2, g1}));
}

std::pair<int, Phase> TwistedAlgebra::star(int g) const {
  const int gi = base_->inverse(g);
  return {gi, twist_({g, gi}).inverse()};
}

int TwistedAlgebra::center_dimension() const {
  // z = sum z_m <m> is central iff for every basis g and every basis k the
  // <k>-coefficients of z<g> and <g>z agree:
  //   src(k)=src(g):  z<g> contributes z_{k g^-1} theta(k g^-1, g),
  //   dst(k)=dst(g):  <g>z contributes z_{g^-1 k} theta(g, g^-1 k),
  // and a contribution on one side only forces that coefficient to zero.
  const int m = base_->num_morphisms();
  PhasedUnionFind uf(m);
  for (int g = 0; g < m; ++g) {
    const int gi = base_->inverse(g);
    for (int k = 0; k < m; ++k) {
      const bool same_src = base_->src(k) == base_->src(g);
      const bool same_dst = base_->dst(k) == base_->dst(g);
      if (same_src && same_dst) {
        const int a = base_->compose(k, gi);  // k g^-1
        const int b = base_->compose(gi, k);  // g^-1 k
        // z_a theta(a, g) = z_b theta(g, b).
        uf.relate(a, b, twist_({g, b}) / twist_({a, g}));
      } else if (same_src) {
        uf.kill(base_->compose(k, gi));
      } else if (same_dst) {
        uf.kill(base_->compose(gi, k));
      }
    }
  }
  return uf.live_classes();
}

void AlgebraRep::validate(double tol) const {
  const Groupoid& b = algebra->base();
  const int m = b.num_morphisms();
  if (static_cast<int>(mat.size()) != m) {
    throw std::invalid_argument("AlgebraRep: one matrix per basis morphism required");
  }
  for (const auto& a : mat) {
    if (a.rows() != dim || a.cols() != dim) {
      throw std::invalid_argument("AlgebraRep: matrix dimensions disagree");
    }
  }
  for (int g2 = 0; g2 < m; ++g2) {
    for (int g1 = 0; g1 < m; ++g1) {
      const Eigen::MatrixXcd prod = mat[g2] * mat[g1];
      const auto p = algebra->product(g2, g1);
      const double err =
          p ? sup_abs(prod - phase_c(p->second) * mat[p->first]) : sup_abs(prod);
      if (err > tol) {
        throw std::logic_error("AlgebraRep: product law fails at (" +
                               std::to_string(g2) + ", " + std::to_string(g1) +
                               "), residual " + std::to_string(err));
      }
    }
  }
  int graded_total = 0;
  for (int d : grading()) graded_total += d;
  if (graded_total != dim) {
    throw std::logic_error("AlgebraRep: object grading does not fill the dimension");
  }
}

std::vector<int> AlgebraRep::grading() const {
  const Groupoid& b = algebra->base();
  std::vector<int> dims(b.num_objects());
  for (int x = 0; x < b.num_objects(); ++x) {
    // rho(<Id_x>) is an idempotent; its rank is its trace.
    const std::complex<double> t = mat[b.identity_at(x)].trace();
    const double r = std::round(t.real());
    if (std::abs(t.real() - r) > 1e-6 || std::abs(t.imag()) > 1e-6 || r < -0.5) {
      throw std::logic_error("AlgebraRep: identity trace is not a nonnegative integer");
    }
    dims[x] = static_cast<int>(r);
  }
  return dims;
}

AlgebraRep AlgebraRep::direct_sum(const std::vector<const AlgebraRep*>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("AlgebraRep::direct_sum: no parts");
  }
  const TwistedAlgebra* alg = parts.front()->algebra;
  int total = 0;
  for (const AlgebraRep* p : parts) {
    if (p->algebra != alg) {
      throw std::invalid_argument("AlgebraRep::direct_sum: mixed algebras");
    }
    total += p->dim;
  }
  const int m = alg->base().num_morphisms();
  std::vector<Eigen::MatrixXcd> mats(m, Eigen::MatrixXcd::Zero(total, total));
  for (int g = 0; g < m; ++g) {
    int off = 0;
    for (const AlgebraRep* p : parts) {
      mats[g].block(off, off, p->dim, p->dim) = p->mat[g];
      off += p->dim;
    }
  }
  return AlgebraRep{alg, total, std::move(mats)};
}

AlgebraRep regular_representation(const TwistedAlgebra& a) {
  const int m = a.dim();
  std::vector<Eigen::MatrixXcd> mats(m, Eigen::MatrixXcd::Zero(m, m));
  for (int g = 0; g < m; ++g) {
    for (int b = 0; b < m; ++b) {
      if (const auto p = a.product(g, b)) {
        mats[g](p->first, b) = phase_c(p->second);
      }
    }
  }
  return AlgebraRep{&a, m, std::move(mats)};
}

CharacterContext make_character_context(const TwistedAlgebra& a) {
  auto loop = std::make_unique<LoopGroupoid>(loop_groupoid(a.base()));
  Cochain tau = transgress(a.twist(), *loop);
  return CharacterContext{&a, std::move(loop), std::move(tau)};
}

TwistedCharacter character(const AlgebraRep& r, const CharacterContext& ctx) {
  if (ctx.algebra != r.algebra) {
    throw std::invalid_argument("character: context belongs to a different algebra");
  }
  TwistedCharacter chi{r.algebra, {}};
  for (int g : r.algebra->base().automorphisms()) {
    chi.values[g] = r.mat[g].trace();
  }
  // chi(h gamma h^-1) = tau([h] gamma) chi(gamma) for every loop morphism.
  const Groupoid& lg = ctx.loop->gpd;
  for (int m = 0; m < lg.num_morphisms(); ++m) {
    const int gamma = ctx.loop->object_loop[lg.src(m)];
    const int conjugated = ctx.loop->object_loop[lg.dst(m)];
    const std::complex<double> lhs = chi.values.at(conjugated);
    const std::complex<double> rhs = phase_c(ctx.tau({m})) * chi.values.at(gamma);
    if (std::abs(lhs - rhs) > 1e-9) {
      throw std::logic_error(
          "character: conjugation covariance fails at loop morphism " +
          std::to_string(m));
    }
  }
  return chi;
}

std::complex<double> char_inner_product(const TwistedCharacter& c1,
                                        const TwistedCharacter& c2) {
  if (c1.algebra != c2.algebra) {
    throw std::invalid_argument("char_inner_product: characters on different algebras");
  }
  const Groupoid& b = c1.algebra->base();
  std::complex<double> total = 0.0;
  for (const auto& [gamma, v1] : c1.values) {
    // The weight is 1 / #(morphisms out of gamma in the loop groupoid),
    // which equals the out-degree of src(gamma) in the base.
    total += std::conj(v1) * c2.values.at(gamma) /
             static_cast<double>(b.out_degree(b.src(gamma)));
  }
  return total;
}

int rep_hom_dimension(const AlgebraRep& r1, const AlgebraRep& r2,
                      const CharacterContext& ctx) {
  if (r1.algebra != r2.algebra) {
    throw std::invalid_argument(
        "rep_hom_dimension: representations on different algebras");
  }
  const int m = r1.algebra->base().num_morphisms();
  const int d1 = r1.dim;
  const int d2 = r2.dim;
  const int cols = d2 * d1;
  // Stack the linear maps X -> rho2(g) X - X rho1(g) (column-major vec):
  // vec(rho2 X) = (I_{d1} kron rho2) vec X, vec(X rho1) = (rho1^T kron I_{d2}) vec X.
  Eigen::MatrixXcd big(static_cast<long>(m) * cols, cols);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(d2, d2);
  for (int g = 0; g < m; ++g) {
    for (int j = 0; j < d1; ++j) {
      for (int i = 0; i < d1; ++i) {
        big.block(static_cast<long>(g) * cols + i * d2, j * d2, d2, d2) =
            (i == j ? r2.mat[g] : Eigen::MatrixXcd::Zero(d2, d2).eval()) -
            r1.mat[g](j, i) * i2;
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(big);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = 1e-6 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int nullity = cols - static_cast<int>(sv.size());
  for (long i = 0; i < sv.size(); ++i) {
    if (sv(i) < cutoff) ++nullity;
  }

  const TwistedCharacter chi1 = character(r1, ctx);
  const TwistedCharacter chi2 = character(r2, ctx);
  const std::complex<double> ip = char_inner_product(chi1, chi2);
  const double rounded = std::round(ip.real());
  if (std::abs(ip.real() - rounded) > 1e-6 || std::abs(ip.imag()) > 1e-6 ||
      static_cast<int>(rounded) != nullity) {
    std::ostringstream msg;
    msg << "rep_hom_dimension: null space dimension " << nullity
        << " disagrees with character inner product (" << ip.real() << ", "
        << ip.imag() << ")";
    throw std::logic_error(msg.str());
  }
  return nullity;
}

int count_irreps(const Groupoid& g, const Cochain& theta) {
  if (&theta.base() != &g) {
    throw std::invalid_argument("count_irreps: cochain lives on a different groupoid");
  }
  const LoopGroupoid loop1 = loop_groupoid(g);
  const Cochain tau1 = transgress(theta, loop1);
  const LoopGroupoid loop2 = loop_groupoid(loop1.gpd);
  const Cochain tau2 = transgress(tau1, loop2);
  return static_cast<int>(integrate(loop2.gpd, tau2).as_integer());
}

int group_count_formula(const FiniteGroup& g, const Cochain& theta) {
  if (theta.degree() != 2) {
    throw std::invalid_argument("group_count_formula: need a degree-2 cochain");
  }
  require_delooping_of(theta.base(), g, "group_count_formula");
  Cyclotomic total = Cyclotomic::zero();
  for (const auto& pair : g.commuting_tuples(2)) {
    const int x = pair[0];
    const int gg = pair[1];
    total = total + Cyclotomic::from_phase(theta({x, gg}) / theta({gg, x}));
  }
  return static_cast<int>(total.scale(Rational(1, g.order())).as_integer());
}

int double_rank_formula(const FiniteGroup& g, const Cochain& omega) {
  if (omega.degree() != 3) {
    throw std::invalid_argument("double_rank_formula: need a degree-3 cochain");
  }
  require_delooping_of(omega.base(), g, "double_rank_formula");
  Cyclotomic total = Cyclotomic::zero();
  for (const auto& t : g.commuting_tuples(3)) {
    const int h = t[0];
    const int x = t[1];
    const int gg = t[2];
    const Phase num = omega({h, x, gg}) * omega({gg, h, x}) * omega({x, gg, h});
    const Phase den = omega({h, gg, x}) * omega({x, h, gg}) * omega({gg, x, h});
    total = total + Cyclotomic::from_phase(num / den);
  }
  const auto closed = static_cast<int>(total.scale(Rational(1, g.order())).as_integer());

  const LoopGroupoid loop1 = loop_groupoid(omega.base());
  const Cochain tau1 = transgress(omega, loop1);
  const LoopGroupoid loop2 = loop_groupoid(loop1.gpd);
  const Cochain tau2 = transgress(tau1, loop2);
  const LoopGroupoid loop3 = loop_groupoid(loop2.gpd);
  const Cochain tau3 = transgress(tau2, loop3);
  const auto integral = static_cast<int>(integrate(loop3.gpd, tau3).as_integer());

  if (closed != integral) {
    throw std::logic_error("double_rank_formula: commuting-triple sum " +
                           std::to_string(closed) +
                           " disagrees with the loop integral " +
                           std::to_string(integral));
  }
  return closed;
}

FlatSections flat_sections(const Cochain& alpha, const Groupoid& g) {
  if (&alpha.base() != &g) {
    throw std::invalid_argument("flat_sections: cochain lives on a different groupoid");
  }
  if (alpha.degree() != 1) {
    throw std::invalid_argument("flat_sections: need a degree-1 cochain");
  }
  FlatSections out{0, {}};
  const int n = g.num_objects();
  for (int rep : g.component_representatives()) {
    // Propagate s(dst f) = alpha(f) s(src f) along a breadth-first tree,
    // then check every in-component morphism against the propagated phases.
    std::vector<Phase> value(n, Phase::one());
    std::vector<bool> seen(n, false);
    seen[rep] = true;
    std::vector<int> queue{rep};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int y = queue[qi];
      for (int f : g.from(y)) {
        const int z = g.dst(f);
        if (!seen[z]) {
          seen[z] = true;
          value[z] = alpha({f}) * value[y];
          queue.push_back(z);
        }
      }
    }
    bool consistent = true;
    for (int y : queue) {
      for (int f : g.from(y)) {
        if (value[g.dst(f)] != alpha({f}) * value[y]) {
          consistent = false;
          break;
        }
      }
      if (!consistent) break;
    }
    if (!consistent) continue;
    Eigen::VectorXcd s = Eigen::VectorXcd::Zero(n);
    for (int y : queue) s(y) = value[y].to_complex();
    out.basis.push_back(std::move(s));
    ++out.dimension;
  }
  if (alpha.is_cocycle()) {
    const LoopGroupoid loop = loop_groupoid(g);
    const Cochain tau = transgress(alpha, loop);
    const auto integral = integrate(loop.gpd, tau).as_integer();
    if (integral != out.dimension) {
      throw std::logic_error("flat_sections: dimension " +
                             std::to_string(out.dimension) +
                             " disagrees with the loop integral " +
                             std::to_string(integral));
    }
  }
  return out;
}

AutAlgebra aut_algebra(const TwistedAlgebra& a, int object) {
  AutomorphismGroup aut = automorphism_group(a.base(), object);
  auto dl = std::make_unique<Groupoid>(delooping(aut.group));
  const std::vector<int>& mor = aut.morphism_of;
  Cochain restricted(*dl, 2, [&](std::span<const int> t) {
    return a.twist()({mor[t[0]], mor[t[1]]});
  });
  TwistedAlgebra algebra(*dl, std::move(restricted));
  return AutAlgebra{std::move(aut), std::move(dl), std::move(algebra)};
}

AlgebraRep dpr_induce(const TwistedAlgebra& a, const RetractionData& data,
                      const AlgebraRep& rho) {
  const Groupoid& b = a.base();
  if (b.num_components() != 1) {
    throw std::invalid_argument("dpr_induce: base groupoid must be connected");
  }
  const int n_obj = b.num_objects();
  if (static_cast<int>(data.basepoint.size()) != n_obj ||
      static_cast<int>(data.to_basepoint.size()) != n_obj) {
    throw std::invalid_argument("dpr_induce: retraction data has the wrong size");
  }
  const int bp = data.basepoint[0];
  for (int y = 0; y < n_obj; ++y) {
    if (data.basepoint[y] != bp || b.src(data.to_basepoint[y]) != y ||
        b.dst(data.to_basepoint[y]) != bp) {
      throw std::invalid_argument("dpr_induce: retraction data is inconsistent");
    }
  }
  if (!b.is_identity(data.to_basepoint[bp])) {
    throw std::invalid_argument("dpr_induce: basepoint connector must be the identity");
  }

  const AutomorphismGroup aut = automorphism_group(b, bp);
  const int n_aut = aut.group.order();
  const Groupoid& rb = rho.algebra->base();
  if (rb.num_objects() != 1 || rb.num_morphisms() != n_aut) {
    throw std::invalid_argument(
        "dpr_induce: rho is not a representation of the basepoint automorphism algebra");
  }
  std::vector<int> aut_index(b.num_morphisms(), -1);
  for (int i = 0; i < n_aut; ++i) {
    aut_index[aut.morphism_of[i]] = i;
  }
  for (int i = 0; i < n_aut; ++i) {
    for (int j = 0; j < n_aut; ++j) {
      const int parent = b.compose(aut.morphism_of[i], aut.morphism_of[j]);
      if (aut_index[parent] != rb.compose(i, j)) {
        throw std::invalid_argument(
            "dpr_induce: rho's algebra composition disagrees with Aut(basepoint)");
      }
      if (rho.algebra->twist()({i, j}) !=
          a.twist()({aut.morphism_of[i], aut.morphism_of[j]})) {
        throw std::invalid_argument(
            "dpr_induce: rho's twist is not the restriction of the target twist");
      }
    }
  }

  const int d = rho.dim;
  const int total = d * n_obj;
  std::vector<Eigen::MatrixXcd> mats(b.num_morphisms(),
                                     Eigen::MatrixXcd::Zero(total, total));
  for (int m = 0; m < b.num_morphisms(); ++m) {
    const int y = b.src(m);
    const int z = b.dst(m);
    const int fy = data.to_basepoint[y];
    const int fz = data.to_basepoint[z];
    const int r = b.compose(fz, b.compose(m, b.inverse(fy)));
    const Phase coeff = a.twist()({fz, m}) / a.twist()({r, fy});
    mats[m].block(static_cast<long>(z) * d, static_cast<long>(y) * d, d, d) =
        phase_c(coeff) * rho.mat[aut_index[r]];
  }
  AlgebraRep induced{&a, total, std::move(mats)};
  induced.validate(1e-9);

  // Induction preserves hom spaces; in particular irreducibility.
  const CharacterContext ctx_in = make_character_context(*rho.algebra);
  const CharacterContext ctx_out = make_character_context(a);
  const int hom_in = rep_hom_dimension(rho, rho, ctx_in);
  const int hom_out = rep_hom_dimension(induced, induced, ctx_out);
  if (hom_in != hom_out) {
    throw std::logic_error("dpr_induce: self-hom dimension changed from " +
                           std::to_string(hom_in) + " to " +
                           std::to_string(hom_out));
  }
  return induced;
}

AlgebraRep extend_by_zero(const TwistedAlgebra& full, const Subgroupoid& sub,
                          const AlgebraRep& sub_rep) {
  if (&sub_rep.algebra->base() != sub.gpd.get()) {
    throw std::invalid_argument(
        "extend_by_zero: representation does not live on the subgroupoid");
  }
  const int sm = sub.gpd->num_morphisms();
  for (int i = 0; i < sm; ++i) {
    for (int j : sub.gpd->to(sub.gpd->src(i))) {
      if (sub_rep.algebra->twist()({i, j}) !=
          full.twist()({sub.morphism_to_parent[i], sub.morphism_to_parent[j]})) {
        throw std::invalid_argument(
            "extend_by_zero: subalgebra twist is not the restriction of the full twist");
      }
    }
  }
  const int d = sub_rep.dim;
  std::vector<Eigen::MatrixXcd> mats(full.base().num_morphisms(),
                                     Eigen::MatrixXcd::Zero(d, d));
  for (int i = 0; i < sm; ++i) {
    mats[sub.morphism_to_parent[i]] = sub_rep.mat[i];
  }
  return AlgebraRep{&full, d, std::move(mats)};
}

}  // namespace qdouble
