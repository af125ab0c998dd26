#include <stdexcept>
#include <string>
#include <utility>

#include "detail.hpp"
#include "qdouble/algebra.hpp"

namespace qdouble {

using detail::require_delooping_of;

DrinfeldDouble drinfeld_double(const FiniteGroup& g, const Cochain& omega) {
  if (omega.degree() != 3) {
    throw std::invalid_argument("drinfeld_double: need a degree-3 cochain");
  }
  require_delooping_of(omega.base(), g, "drinfeld_double");
  if (!omega.is_cocycle()) {
    throw std::invalid_argument("drinfeld_double: twist must be a cocycle");
  }

  auto loop = std::make_unique<LoopGroupoid>(loop_groupoid(omega.base()));
  Cochain tau = transgress(omega, *loop);
  TwistedAlgebra algebra(loop->gpd, std::move(tau));

  // Cross-check the generic structure table against the closed-form
  // product of the double: <h at y><g at x> is zero unless y = g x g^-1,
  // and otherwise equals
  //   omega(h,g,x) omega(hgx(hg)^-1,h,g) / omega(h, gxg^-1, g)  <hg at x>.
  const Groupoid& lg = loop->gpd;
  for (int m2 = 0; m2 < lg.num_morphisms(); ++m2) {
    const int h = loop->morphism_g[m2];
    const int y = loop->object_loop[lg.src(m2)];
    for (int m1 = 0; m1 < lg.num_morphisms(); ++m1) {
      const int gg = loop->morphism_g[m1];
      const int x = loop->object_loop[lg.src(m1)];
      const auto p = algebra.product(m2, m1);
      if (g.conj(gg, x) != y) {
        if (p) {
          throw std::logic_error("drinfeld_double: product should vanish but does not");
        }
        continue;
      }
      if (!p) {
        throw std::logic_error("drinfeld_double: product vanishes unexpectedly");
      }
      const int hg = g.mul(h, gg);
      const Phase expected = omega({h, gg, x}) * omega({g.conj(hg, x), h, gg}) /
                             omega({h, g.conj(gg, x), gg});
      if (p->first != loop->morphism_id(lg.src(m1), hg) || p->second != expected) {
        throw std::logic_error(
            "drinfeld_double: structure table disagrees with the closed form");
      }
    }
  }
  return DrinfeldDouble{std::move(loop), std::move(algebra)};
}

Phase EllipticContext::ratio(int h, int g, int x) const {
  const FiniteGroup& grp = *group;
  if (!grp.commute(g, x)) {
    throw std::invalid_argument("EllipticContext::ratio: (g, x) must commute");
  }
  const int hg = grp.conj(h, g);
  const int hx = grp.conj(h, x);
  const Cochain& w = *omega;
  const Phase num = w({h, x, g}) * w({hg, h, x}) * w({hx, hg, h});
  const Phase den = w({h, g, x}) * w({hx, h, g}) * w({hg, hx, h});
  return num / den;
}

EllipticContext make_elliptic_context(const FiniteGroup& g, const Cochain& omega) {
  if (omega.degree() != 3) {
    throw std::invalid_argument("make_elliptic_context: need a degree-3 cochain");
  }
  require_delooping_of(omega.base(), g, "make_elliptic_context");
  EllipticContext ctx{&g,      &omega, nullptr, Cochain::trivial(omega.base(), 0),
                      nullptr, Cochain::trivial(omega.base(), 0)};
  ctx.loop = std::make_unique<LoopGroupoid>(loop_groupoid(omega.base()));
  ctx.tau = transgress(omega, *ctx.loop);
  ctx.loop2 = std::make_unique<LoopGroupoid>(loop_groupoid(ctx.loop->gpd));
  ctx.tau2 = transgress(ctx.tau, *ctx.loop2);

  // The double transgression must reproduce the closed-form conjugation
  // ratio on every double-loop morphism, exactly.
  const Groupoid& l2 = ctx.loop2->gpd;
  for (int m = 0; m < l2.num_morphisms(); ++m) {
    const int h_mor = ctx.loop2->morphism_g[m];  // a morphism of the loop groupoid
    const int h = ctx.loop->morphism_g[h_mor];   // its group element
    const int pair_loop = ctx.loop2->object_loop[l2.src(m)];
    const int gg = ctx.loop->morphism_g[pair_loop];
    const int x = ctx.loop->object_loop[ctx.loop->gpd.src(pair_loop)];
    if (ctx.tau2({m}) != ctx.ratio(h, gg, x)) {
      throw std::logic_error(
          "make_elliptic_context: double transgression disagrees with the closed form");
    }
  }
  return ctx;
}

EllipticCheck elliptic_character_check(
    const EllipticContext& ctx,
    const std::map<std::pair<int, int>, std::complex<double>>& chi,
    double tolerance) {
  const FiniteGroup& g = *ctx.group;
  const auto value = [&](int x, int gg) {
    const auto it = chi.find({x, gg});
    return it == chi.end() ? std::complex<double>(0.0) : it->second;
  };
  double worst = 0.0;
  const Groupoid& l2 = ctx.loop2->gpd;
  for (int m = 0; m < l2.num_morphisms(); ++m) {
    const int h = ctx.loop->morphism_g[ctx.loop2->morphism_g[m]];
    const int pair_loop = ctx.loop2->object_loop[l2.src(m)];
    const int gg = ctx.loop->morphism_g[pair_loop];
    const int x = ctx.loop->object_loop[ctx.loop->gpd.src(pair_loop)];
    const std::complex<double> lhs = value(g.conj(h, x), g.conj(h, gg));
    const std::complex<double> rhs = ctx.ratio(h, gg, x).to_complex() * value(x, gg);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return EllipticCheck{worst <= tolerance, worst};
}

}  // namespace qdouble
