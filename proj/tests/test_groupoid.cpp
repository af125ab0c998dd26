#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "qdouble/builtins.hpp"
#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"
#include "testutil.hpp"

using namespace qdouble;

TEST_SUITE("groupoid") {

TEST_CASE("delooping has one object and the group as morphisms") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl = delooping(s3);
  CHECK(dl.num_objects() == 1);
  CHECK(dl.num_morphisms() == 6);
  CHECK(dl.identity_at(0) == 0);
  for (int a = 0; a < 6; ++a) {
    CHECK(dl.inverse(a) == s3.inv(a));
    for (int b = 0; b < 6; ++b) CHECK(dl.compose(a, b) == s3.mul(a, b));
  }
  CHECK(dl.num_components() == 1);
}

TEST_CASE("groupoid construction rejects broken composition tables") {
  // A two-object "groupoid" whose only cross morphism has no inverse.
  std::vector<int> src = {0, 1, 0}, dst = {0, 1, 1}, ids = {0, 1};
  std::vector<std::int32_t> table = {
      0, -1, -1,   // 0 . {0,1,2}
      -1, 1, 2,    // 1 . {0,1,2}
      2, -1, -1,   // 2 . {0,1,2}
  };
  CHECK_THROWS_AS(Groupoid(2, src, dst, ids, table), std::invalid_argument);
}

TEST_CASE("the loop groupoid of a one-object groupoid lists conjugations") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl = delooping(s3);
  const LoopGroupoid loop = loop_groupoid(dl);
  CHECK(loop.gpd.num_objects() == 6);
  CHECK(loop.gpd.num_morphisms() == 36);
  CHECK(loop.gpd.num_components() == 3);  // one per conjugacy class
  // Morphism x -(g)-> g x g^-1, with the advertised id layout.
  for (int x = 0; x < 6; ++x)
    for (int g = 0; g < 6; ++g) {
      const int m = loop.morphism_id(loop.loop_object[x], g);
      CHECK(loop.morphism_g[m] == g);
      CHECK(loop.object_loop[loop.gpd.src(m)] == x);
      CHECK(loop.object_loop[loop.gpd.dst(m)] == s3.conj(g, x));
    }
  // Automorphism counts at a loop x equal the centralizer order of x.
  const std::vector<int> expected_aut = {6, 2, 2, 3, 3, 2};
  for (int x = 0; x < 6; ++x)
    CHECK(loop.gpd.automorphisms_at(loop.loop_object[x]).size() ==
          static_cast<std::size_t>(expected_aut[x]));
}

TEST_CASE("the loop groupoid of a delooping is the conjugation action groupoid") {
  for (const char* spec : {"symmetric:3", "cyclic:4", "dihedral:4"}) {
    const FiniteGroup g = builtins::make_group(spec);
    const Groupoid dl = delooping(g);
    const LoopGroupoid loop = loop_groupoid(dl);
    const Groupoid act = action_groupoid(g, conjugation_action(g));
    REQUIRE(loop.gpd.num_objects() == act.num_objects());
    REQUIRE(loop.gpd.num_morphisms() == act.num_morphisms());
    for (int m = 0; m < act.num_morphisms(); ++m) {
      CHECK(loop.gpd.src(m) == act.src(m));
      CHECK(loop.gpd.dst(m) == act.dst(m));
    }
    for (int a = 0; a < act.num_morphisms(); ++a)
      for (int b = 0; b < act.num_morphisms(); ++b)
        CHECK(loop.gpd.try_compose(a, b) == act.try_compose(a, b));
  }
}

TEST_CASE("composable tuple enumeration is lexicographic and complete") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl = delooping(s3);
  int count = 0;
  std::vector<int> prev;
  for_each_composable(dl, 2, [&](std::span<const int> t) {
    ++count;
    std::vector<int> cur(t.begin(), t.end());
    if (!prev.empty()) CHECK(prev < cur);
    prev = cur;
  });
  CHECK(count == 36);
  // Degree 0 visits one singleton per object carrying the object id.
  const LoopGroupoid loop = loop_groupoid(dl);
  std::vector<int> objects;
  for_each_composable(loop.gpd, 0, [&](std::span<const int> t) {
    REQUIRE(t.size() == 1);
    objects.push_back(t[0]);
  });
  CHECK(objects.size() == 6);
  CHECK(std::is_sorted(objects.begin(), objects.end()));
  // Degree 2 on the loop groupoid matches the composability relation.
  int pairs = 0;
  for_each_composable(loop.gpd, 2, [&](std::span<const int> t) {
    REQUIRE(loop.gpd.try_compose(t[0], t[1]) >= 0);
    ++pairs;
  });
  int expected = 0;
  for (int a = 0; a < 36; ++a)
    for (int b = 0; b < 36; ++b)
      if (loop.gpd.try_compose(a, b) >= 0) ++expected;
  CHECK(pairs == expected);
}

TEST_CASE("functors validate structure preservation") {
  const Groupoid dl2 = delooping(build_cyclic(2));
  const Groupoid dl4 = delooping(build_cyclic(4));
  // Reduction mod 2 is a functor Z/4 -> Z/2.
  const GroupoidFunctor f(dl4, dl2, {0}, {0, 1, 0, 1});
  CHECK(f.at_morphism(3) == 1);
  // Doubling into Z/4 is one as well.
  const GroupoidFunctor h(dl2, dl4, {0}, {0, 2});
  const GroupoidFunctor fh = GroupoidFunctor::compose(f, h);
  CHECK(fh.at_morphism(1) == 0);
  // A map that breaks composition is rejected.
  CHECK_THROWS_AS(GroupoidFunctor(dl4, dl2, {0}, {0, 1, 1, 0}),
                  std::invalid_argument);
  // Identity functor round-trips.
  const GroupoidFunctor id = GroupoidFunctor::identity(dl4);
  for (int m = 0; m < 4; ++m) CHECK(id.at_morphism(m) == m);
}

TEST_CASE("natural transformations are validated exhaustively") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl = delooping(s3);
  const LoopGroupoid loop = loop_groupoid(dl);
  const Retraction r = retraction(loop.gpd, default_retraction_data(loop.gpd));
  // t : Id => i.r with components the chosen connecting morphisms.
  CHECK(r.t.from.object_map == GroupoidFunctor::identity(loop.gpd).object_map);
  for (int x = 0; x < loop.gpd.num_objects(); ++x)
    CHECK(loop.gpd.src(r.t.at(x)) == x);
  // Shifting one component breaks naturality.
  std::vector<int> broken = r.t.component;
  const int x0 = 1;
  for (const int m : loop.gpd.from(x0)) {
    if (m != broken[x0] && loop.gpd.dst(m) == loop.gpd.dst(broken[x0])) {
      broken[x0] = m;
      CHECK_THROWS_AS(NaturalTransformation(r.t.from, r.t.to, broken),
                      std::invalid_argument);
      break;
    }
  }
}

TEST_CASE("retraction collapses a groupoid onto its basepoint automorphisms") {
  const FiniteGroup s3 = build_symmetric(3);
  const Groupoid dl = delooping(s3);
  const LoopGroupoid loop = loop_groupoid(dl);
  const Retraction r = retraction(loop.gpd, default_retraction_data(loop.gpd));
  CHECK(r.aut_union->num_objects() == 3);
  CHECK(r.aut_union->num_morphisms() == 6 + 2 + 3);
  // r . i is the identity on the union of automorphism groups.
  for (int m = 0; m < r.aut_union->num_morphisms(); ++m)
    CHECK(r.r.at_morphism(r.i.at_morphism(m)) == m);
  // i . r fixes basepoint automorphisms.
  for (int x = 0; x < r.aut_union->num_objects(); ++x)
    CHECK(r.ir.at_object(r.i.at_object(x)) == r.i.at_object(x));
}

TEST_CASE("random retraction data is deterministic in the seed and valid") {
  const FiniteGroup d4 = build_dihedral(4);
  const LoopGroupoid loop = loop_groupoid(delooping(d4));
  const RetractionData a = random_retraction_data(loop.gpd, 11);
  const RetractionData b = random_retraction_data(loop.gpd, 11);
  CHECK(a.basepoint == b.basepoint);
  CHECK(a.to_basepoint == b.to_basepoint);
  const RetractionData c = random_retraction_data(loop.gpd, 12);
  CHECK((a.basepoint != c.basepoint || a.to_basepoint != c.to_basepoint));
  // Every choice of data yields a valid retraction.
  retraction(loop.gpd, a);
  retraction(loop.gpd, c);
}

TEST_CASE("automorphism groups are labeled with the identity first") {
  const FiniteGroup s3 = build_symmetric(3);
  const LoopGroupoid loop = loop_groupoid(delooping(s3));
  const int obj = loop.loop_object[1];  // a transposition loop
  const AutomorphismGroup aut = automorphism_group(loop.gpd, obj);
  CHECK(aut.group.order() == 2);
  CHECK(aut.morphism_of[0] == loop.gpd.identity_at(obj));
  // The labeling is an isomorphism onto the automorphisms at obj.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(aut.morphism_of[aut.group.mul(a, b)] ==
            loop.gpd.compose(aut.morphism_of[a], aut.morphism_of[b]));
}

TEST_CASE("disjoint unions renumber parts in order") {
  const Groupoid a = delooping(build_cyclic(2));
  const Groupoid b = testutil::cyclic_bundle(2, 3);
  const Groupoid u = disjoint_union({&a, &b});
  CHECK(u.num_objects() == 3);
  CHECK(u.num_morphisms() == 2 + 12);
  CHECK(u.num_components() == 2);
  CHECK(u.components() == std::vector<int>{0, 1, 1});
  // Cross-part compositions are undefined.
  CHECK(u.try_compose(0, 2) == -1);
  // Within parts the tables are preserved (part b shifted by 2).
  CHECK(u.compose(1, 1) == 0);
  for (int m2 = 0; m2 < 12; ++m2)
    for (int m1 = 0; m1 < 12; ++m1) {
      const int c = b.try_compose(m2, m1);
      CHECK(u.try_compose(m2 + 2, m1 + 2) == (c == -1 ? -1 : c + 2));
    }
}

TEST_CASE("full subgroupoids keep every morphism between chosen objects") {
  const FiniteGroup s3 = build_symmetric(3);
  const LoopGroupoid loop = loop_groupoid(delooping(s3));
  // The transposition component: loops 1, 2, 5.
  std::vector<int> objects = {loop.loop_object[1], loop.loop_object[2],
                              loop.loop_object[5]};
  std::sort(objects.begin(), objects.end());
  const Subgroupoid sub = full_subgroupoid(loop.gpd, objects);
  CHECK(sub.gpd->num_objects() == 3);
  CHECK(sub.gpd->num_morphisms() == 18);
  CHECK(sub.gpd->num_components() == 1);
  // The parent maps form an inclusion functor.
  const GroupoidFunctor inc(*sub.gpd, loop.gpd, sub.object_to_parent,
                            sub.morphism_to_parent);
  for (int m = 0; m < sub.gpd->num_morphisms(); ++m)
    CHECK(loop.gpd.src(inc.at_morphism(m)) == inc.at_object(sub.gpd->src(m)));
}

TEST_CASE("seeded test groupoids have the advertised component structure") {
  const testutil::TestGroupoid tg = testutil::random_test_groupoid(42, 12);
  CHECK(tg.gpd->num_objects() <= 12);
  CHECK(tg.gpd->num_components() == static_cast<int>(tg.comp_order.size()));
  // Labels add under composition within each component.
  for (int m2 = 0; m2 < tg.gpd->num_morphisms(); ++m2)
    for (int m1 = 0; m1 < tg.gpd->num_morphisms(); ++m1) {
      const int c = tg.gpd->try_compose(m2, m1);
      if (c < 0) continue;
      const int comp = tg.gpd->components()[tg.gpd->src(m1)];
      CHECK((tg.angle[m2] + tg.angle[m1]) % tg.comp_order[comp] == tg.angle[c]);
    }
  // Determinism.
  const testutil::TestGroupoid tg2 = testutil::random_test_groupoid(42, 12);
  CHECK(tg.gpd->num_morphisms() == tg2.gpd->num_morphisms());
  CHECK(tg.angle == tg2.angle);
}

}  // TEST_SUITE("groupoid")
