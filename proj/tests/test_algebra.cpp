#include <doctest.h>

#include <algorithm>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "qdouble/algebra.hpp"
#include "qdouble/builtins.hpp"
#include "qdouble/cochain.hpp"
#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"
#include "testutil.hpp"

using namespace qdouble;

namespace {

std::vector<long long> rounded_character(const TwistedCharacter& c) {
  std::vector<long long> v;
  for (const auto& [m, z] : c.values) {
    v.push_back(std::llround(z.real() * 1e6));
    v.push_back(std::llround(z.imag() * 1e6));
  }
  return v;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("twist validation rejects bad inputs") {
  const Groupoid dl3 = delooping(build_cyclic(3));
  // Wrong degree.
  CHECK_THROWS_AS(TwistedAlgebra(dl3, Cochain::trivial(dl3, 3)), std::exception);
  // Not a cocycle.
  const Cochain bad(dl3, 2, [](std::span<const int> t) {
    return Phase(static_cast<std::int64_t>(t[0]) * t[1] * t[1], 3);
  });
  CHECK_THROWS_AS(TwistedAlgebra(dl3, bad), std::exception);
  // A cocycle that is not normalized.
  const Cochain constant(dl3, 2, [](std::span<const int>) { return Phase(1, 3); });
  CHECK(constant.is_cocycle());
  CHECK_FALSE(constant.normalized());
  CHECK_THROWS_AS(TwistedAlgebra(dl3, constant), std::exception);
}

TEST_CASE("the sign-twisted Klein algebra anticommutes its generators") {
  const FiniteGroup v = builtins::make_group("product:cyclic:2,cyclic:2");
  const Groupoid dl = delooping(v);
  const TwistedAlgebra a(dl, builtins::make_cocycle("cocycle:klein-thetaV", dl));
  CHECK(a.dim() == 4);
  // <a><b> = -<ab> while <b><a> = +<ab>.
  const auto ab = a.product(2, 1), ba = a.product(1, 2);
  REQUIRE(ab.has_value());
  REQUIRE(ba.has_value());
  CHECK(ab->first == 3);
  CHECK(ba->first == 3);
  CHECK(ab->second == Phase(1, 2));
  CHECK(ba->second == Phase::one());
  // Identity acts trivially on both sides.
  for (int g = 0; g < 4; ++g) {
    CHECK(a.product(0, g) == std::pair(g, Phase::one()));
    CHECK(a.product(g, 0) == std::pair(g, Phase::one()));
  }
  CHECK(a.center_dimension() == 1);
}

TEST_CASE("products vanish exactly on non-composable pairs") {
  const FiniteGroup s3 = build_symmetric(3);
  const LoopGroupoid loop = loop_groupoid(delooping(s3));
  const TwistedAlgebra a(loop.gpd, Cochain::trivial(loop.gpd, 2));
  int zero = 0, nonzero = 0;
  for (int m2 = 0; m2 < a.dim(); ++m2)
    for (int m1 = 0; m1 < a.dim(); ++m1) {
      const auto p = a.product(m2, m1);
      if (loop.gpd.try_compose(m2, m1) < 0) {
        CHECK_FALSE(p.has_value());
        ++zero;
      } else {
        REQUIRE(p.has_value());
        CHECK(p->first == loop.gpd.compose(m2, m1));
        CHECK(p->second == Phase::one());
        ++nonzero;
      }
    }
  CHECK(zero + nonzero == a.dim() * a.dim());
  CHECK(nonzero > 0);
  CHECK(zero > 0);
}

TEST_CASE("the star is an exact anti-involution") {
  const FiniteGroup v = builtins::make_group("product:cyclic:2,cyclic:2");
  const Groupoid dl = delooping(v);
  const TwistedAlgebra a(dl, builtins::make_cocycle("cocycle:klein-thetaV", dl));
  // <g>* = theta(g, g^-1)^-1 <g^-1>; here every element is its own inverse.
  CHECK(a.star(0) == std::pair(0, Phase::one()));
  CHECK(a.star(1) == std::pair(1, Phase::one()));
  CHECK(a.star(2) == std::pair(2, Phase::one()));
  CHECK(a.star(3) == std::pair(3, Phase(1, 2)));
  // Applying the star twice returns <g> (conjugate-linearity cancels the
  // phase exactly when the two star phases agree).
  const FiniteGroup e8 = builtins::make_group("product:cyclic:2,cyclic:2,cyclic:2");
  const Groupoid dl8 = delooping(e8);
  const Cochain omega = builtins::make_cocycle("cocycle:z2cubed-omega", dl8);
  const DrinfeldDouble dd = drinfeld_double(e8, omega);
  for (int g = 0; g < dd.algebra.dim(); ++g) {
    const auto [ginv, phase] = dd.algebra.star(g);
    const auto [back, phase2] = dd.algebra.star(ginv);
    CHECK(back == g);
    CHECK(phase2 == phase);
  }
}

TEST_CASE("the regular representation satisfies the product law") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl = delooping(s3);
  const TwistedAlgebra a(dl, Cochain::trivial(dl, 2));
  const AlgebraRep reg = regular_representation(a);
  reg.validate(1e-12);
  CHECK(reg.dim == 6);
  CHECK(reg.grading() == std::vector<int>{6});
  // On a multi-object base the grading splits by incoming morphisms.
  const LoopGroupoid loop = loop_groupoid(dl);
  const TwistedAlgebra la(loop.gpd, Cochain::trivial(loop.gpd, 2));
  const AlgebraRep lreg = regular_representation(la);
  lreg.validate(1e-12);
  const std::vector<int> grading = lreg.grading();
  int total = 0;
  for (const int d : grading) total += d;
  CHECK(total == 36);
}

TEST_CASE("the untwisted symmetric-group algebra decomposes classically") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl = delooping(s3);
  const TwistedAlgebra a(dl, Cochain::trivial(dl, 2));
  CHECK(a.center_dimension() == 3);
  const Decomposition dec = decompose(a, 0);
  CHECK(dec.center_dimension == 3);
  REQUIRE(dec.irreps.size() == 3);
  CHECK(testutil::dimension_multiset(dec) == std::map<int, int>{{1, 2}, {2, 1}});
  CHECK(dec.multiplicities == std::vector<int>{1, 1, 2});
  // Character table: trivial, sign, and the two-dimensional representation.
  const CharacterContext ctx = make_character_context(a);
  std::set<std::vector<long long>> seen;
  for (const AlgebraRep& r : dec.irreps)
    seen.insert(rounded_character(character(r, ctx)));
  const long long M = 1000000;
  const std::set<std::vector<long long>> expected = {
      {M, 0, M, 0, M, 0, M, 0, M, 0, M, 0},
      {M, 0, -M, 0, -M, 0, M, 0, M, 0, -M, 0},
      {2 * M, 0, 0, 0, 0, 0, -M, 0, -M, 0, 0, 0},
  };
  CHECK(seen == expected);
}

TEST_CASE("the twisted Klein algebra is a single two-dimensional matrix block") {
  const FiniteGroup v = builtins::make_group("product:cyclic:2,cyclic:2");
  const Groupoid dl = delooping(v);
  const TwistedAlgebra a(dl, builtins::make_cocycle("cocycle:klein-thetaV", dl));
  const Decomposition dec = decompose(a, 0);
  REQUIRE(dec.irreps.size() == 1);
  CHECK(dec.irreps[0].dim == 2);
  CHECK(dec.multiplicities == std::vector<int>{2});
  const CharacterContext ctx = make_character_context(a);
  const TwistedCharacter chi = character(dec.irreps[0], ctx);
  REQUIRE(chi.values.size() == 4);
  CHECK(std::abs(chi.values.at(0) - std::complex<double>(2, 0)) < 1e-9);
  for (int g = 1; g < 4; ++g) CHECK(std::abs(chi.values.at(g)) < 1e-9);
}

TEST_CASE("decomposition is deterministic in the seed") {
  const FiniteGroup s3 = build_symmetric(3);
  const DrinfeldDouble d = drinfeld_double(s3, Cochain::trivial(delooping(s3), 3));
  const Decomposition a = decompose(d.algebra, 5);
  const Decomposition b = decompose(d.algebra, 5);
  REQUIRE(a.irreps.size() == b.irreps.size());
  const CharacterContext ctx = make_character_context(d.algebra);
  for (std::size_t i = 0; i < a.irreps.size(); ++i)
    CHECK(testutil::character_distance(character(a.irreps[i], ctx),
                                       character(b.irreps[i], ctx)) == 0.0);
}

TEST_CASE("characters are orthonormal and detect intertwiner dimensions") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl = delooping(s3);
  const TwistedAlgebra a(dl, Cochain::trivial(dl, 2));
  const Decomposition dec = decompose(a, 1);
  const CharacterContext ctx = make_character_context(a);
  std::vector<TwistedCharacter> chars;
  for (const AlgebraRep& r : dec.irreps) chars.push_back(character(r, ctx));
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      const std::complex<double> g = char_inner_product(chars[i], chars[j]);
      CHECK(std::abs(g - std::complex<double>(i == j ? 1.0 : 0.0, 0.0)) < 1e-9);
      CHECK(rep_hom_dimension(dec.irreps[i], dec.irreps[j], ctx) ==
            (i == j ? 1 : 0));
    }
  // The regular module contains each irreducible with multiplicity its
  // dimension.
  const AlgebraRep reg = regular_representation(a);
  const TwistedCharacter reg_chi = character(reg, ctx);
  CHECK(std::abs(char_inner_product(reg_chi, reg_chi) -
                 std::complex<double>(6, 0)) < 1e-9);
  for (std::size_t i = 0; i < chars.size(); ++i)
    CHECK(rep_hom_dimension(reg, dec.irreps[i], ctx) == dec.irreps[i].dim);
}

TEST_CASE("direct sums add characters and gradings") {
  const FiniteGroup v = builtins::make_group("product:cyclic:2,cyclic:2");
  const Groupoid dl = delooping(v);
  const TwistedAlgebra a(dl, builtins::make_cocycle("cocycle:klein-thetaV", dl));
  const Decomposition dec = decompose(a, 0);
  const AlgebraRep sum = AlgebraRep::direct_sum({&dec.irreps[0], &dec.irreps[0]});
  sum.validate(1e-9);
  CHECK(sum.dim == 4);
  const CharacterContext ctx = make_character_context(a);
  const TwistedCharacter c1 = character(dec.irreps[0], ctx);
  const TwistedCharacter c2 = character(sum, ctx);
  for (const auto& [m, z] : c1.values) CHECK(std::abs(c2.values.at(m) - 2.0 * z) < 1e-9);
  CHECK(rep_hom_dimension(sum, sum, ctx) == 4);
}

TEST_CASE("flat sections solve the transport equation component by component") {
  // Two one-object components: trivial character on one, nontrivial on the
  // other; only the trivial one carries a section.
  const Groupoid z2 = delooping(build_cyclic(2));
  const Groupoid z3 = delooping(build_cyclic(3));
  const Groupoid u = disjoint_union({&z2, &z3});
  const Cochain alpha(u, 1, [](std::span<const int> t) {
    return t[0] == 1 ? Phase(1, 2) : Phase::one();  // sign character on Z/2
  });
  REQUIRE(alpha.is_cocycle());
  const FlatSections fs = flat_sections(alpha, u);
  CHECK(fs.dimension == 1);
  REQUIRE(fs.basis.size() == 1);
  CHECK(std::abs(fs.basis[0](0)) < 1e-12);     // no section on the twisted part
  CHECK(std::abs(fs.basis[0](1)) > 1e-12);     // supported on the trivial part
  // Sections transport along every morphism: s(dst) = alpha(m) s(src).
  const testutil::TestGroupoid tg = testutil::random_test_groupoid(31, 10);
  std::vector<int> j(tg.comp_order.size(), 0);
  const Cochain beta =
      testutil::character_cocycle(tg, j) * random_cocycle(*tg.gpd, 1, 31);
  const FlatSections all = flat_sections(beta, *tg.gpd);
  CHECK(all.dimension == static_cast<int>(tg.comp_order.size()));
  for (const auto& s : all.basis)
    for (int m = 0; m < tg.gpd->num_morphisms(); ++m)
      CHECK(std::abs(s(tg.gpd->dst(m)) -
                     beta({m}).to_complex() * s(tg.gpd->src(m))) < 1e-9);
}

TEST_CASE("irreducible counts agree across closed form and transgression") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl3 = delooping(s3);
  CHECK(group_count_formula(s3, Cochain::trivial(dl3, 2)) == 3);
  CHECK(count_irreps(dl3, Cochain::trivial(dl3, 2)) == 3);
  CHECK(double_rank_formula(s3, Cochain::trivial(dl3, 3)) == 8);

  const FiniteGroup v = builtins::make_group("product:cyclic:2,cyclic:2");
  const Groupoid dlv = delooping(v);
  const Cochain theta = builtins::make_cocycle("cocycle:klein-thetaV", dlv);
  CHECK(group_count_formula(v, theta) == 1);
  CHECK(count_irreps(dlv, theta) == 1);
  CHECK(group_count_formula(v, Cochain::trivial(dlv, 2)) == 4);

  const FiniteGroup e8 = builtins::make_group("product:cyclic:2,cyclic:2,cyclic:2");
  const Groupoid dl8 = delooping(e8);
  CHECK(group_count_formula(e8, Cochain::trivial(dl8, 2)) == 8);
  const Cochain omega = builtins::make_cocycle("cocycle:z2cubed-omega", dl8);
  CHECK(double_rank_formula(e8, omega) == 22);
}

TEST_CASE("induction from a basepoint reaches the whole component") {
  const FiniteGroup s3 = build_symmetric(3);
  const LoopGroupoid loop = loop_groupoid(delooping(s3));
  // The transposition component with the trivial twist.
  std::vector<int> objects;
  const int obj1 = loop.loop_object[1];
  for (int x = 0; x < loop.gpd.num_objects(); ++x)
    if (loop.gpd.components()[x] == loop.gpd.components()[obj1]) objects.push_back(x);
  const Subgroupoid sub = full_subgroupoid(loop.gpd, objects);
  const TwistedAlgebra comp(*sub.gpd, Cochain::trivial(*sub.gpd, 2));
  const int local = static_cast<int>(
      std::find(sub.object_to_parent.begin(), sub.object_to_parent.end(), obj1) -
      sub.object_to_parent.begin());
  const AutAlgebra aut = aut_algebra(comp, local);
  CHECK(aut.aut.group.order() == 2);
  const Decomposition cd = decompose(aut.algebra, 0);
  REQUIRE(cd.irreps.size() == 2);
  const RetractionData data = testutil::rooted_retraction_data(*sub.gpd, local);
  for (const AlgebraRep& rho : cd.irreps) {
    const AlgebraRep ind = dpr_induce(comp, data, rho);
    CHECK(ind.dim == 3);  // one copy of the fiber per object in the class
    ind.validate(1e-9);
    CHECK(ind.grading() == std::vector<int>{1, 1, 1});
  }
}

TEST_CASE("induced characters do not depend on the connecting morphisms") {
  const FiniteGroup d4 = build_dihedral(4);
  const Groupoid dl = delooping(d4);
  const Cochain omega = random_cocycle(dl, 3, 17);
  const DrinfeldDouble dd = drinfeld_double(d4, omega);
  const LoopGroupoid& loop = *dd.loop;
  const CharacterContext ctx = make_character_context(dd.algebra);
  // A class with several elements: the reflections {4, 6} say.
  const int obj = loop.loop_object[4];
  std::vector<int> objects;
  for (int x = 0; x < loop.gpd.num_objects(); ++x)
    if (loop.gpd.components()[x] == loop.gpd.components()[obj]) objects.push_back(x);
  REQUIRE(objects.size() > 1);
  const Subgroupoid sub = full_subgroupoid(loop.gpd, objects);
  const GroupoidFunctor inc(*sub.gpd, loop.gpd, sub.object_to_parent,
                            sub.morphism_to_parent);
  const TwistedAlgebra comp(*sub.gpd, pullback(inc, dd.algebra.twist()));
  const int local = static_cast<int>(
      std::find(sub.object_to_parent.begin(), sub.object_to_parent.end(), obj) -
      sub.object_to_parent.begin());
  const AutAlgebra aut = aut_algebra(comp, local);
  const Decomposition cd = decompose(aut.algebra, 0);

  const RetractionData tree = testutil::rooted_retraction_data(*sub.gpd, local);
  RetractionData random_data = random_retraction_data(*sub.gpd, 99);
  // Force the same basepoint, keep the random connectors.
  const int found = random_data.basepoint[0];
  if (found != local) {
    // Re-root the random connectors through any morphism found -> local.
    int bridge = -1;
    for (const int m : sub.gpd->from(found))
      if (sub.gpd->dst(m) == local) bridge = m;
    REQUIRE(bridge >= 0);
    for (int y = 0; y < sub.gpd->num_objects(); ++y) {
      random_data.basepoint[y] = local;
      random_data.to_basepoint[y] =
          sub.gpd->compose(bridge, random_data.to_basepoint[y]);
    }
  }
  for (const AlgebraRep& rho : cd.irreps) {
    const AlgebraRep ind1 = dpr_induce(comp, tree, rho);
    const AlgebraRep ind2 = dpr_induce(comp, random_data, rho);
    const AlgebraRep e1 = extend_by_zero(dd.algebra, sub, ind1);
    const AlgebraRep e2 = extend_by_zero(dd.algebra, sub, ind2);
    const TwistedCharacter c1 = character(e1, ctx);
    const TwistedCharacter c2 = character(e2, ctx);
    CHECK(testutil::character_distance(c1, c2) < 1e-9);
  }
}

TEST_CASE("extension by zero embeds a component module into the full algebra") {
  const FiniteGroup s3 = build_symmetric(3);
  const LoopGroupoid loop = loop_groupoid(delooping(s3));
  const TwistedAlgebra full(loop.gpd, Cochain::trivial(loop.gpd, 2));
  std::vector<int> objects;
  const int obj1 = loop.loop_object[1];
  for (int x = 0; x < loop.gpd.num_objects(); ++x)
    if (loop.gpd.components()[x] == loop.gpd.components()[obj1]) objects.push_back(x);
  const Subgroupoid sub = full_subgroupoid(loop.gpd, objects);
  const TwistedAlgebra comp(*sub.gpd, Cochain::trivial(*sub.gpd, 2));
  const AutAlgebra aut = aut_algebra(comp, 0);
  const Decomposition cd = decompose(aut.algebra, 0);
  const RetractionData data = testutil::rooted_retraction_data(*sub.gpd, 0);
  const AlgebraRep ind = dpr_induce(comp, data, cd.irreps[0]);
  const AlgebraRep ext = extend_by_zero(full, sub, ind);
  ext.validate(1e-9);
  CHECK(ext.dim == ind.dim);
  // Morphisms outside the component act as zero.
  for (int m = 0; m < loop.gpd.num_morphisms(); ++m) {
    const bool inside = loop.gpd.components()[loop.gpd.src(m)] ==
                        loop.gpd.components()[obj1];
    if (!inside) CHECK(ext.mat[m].norm() == 0.0);
  }
}

}  // TEST_SUITE("algebra")
