#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "qdouble/builtins.hpp"
#include "qdouble/group.hpp"

using namespace qdouble;

TEST_SUITE("group") {

TEST_CASE("cyclic groups add indices modulo n") {
  const FiniteGroup g = build_cyclic(6);
  CHECK(g.order() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(g.mul(a, b) == (a + b) % 6);
  CHECK(g.inv(2) == 4);
  CHECK(g.inv(0) == 0);
  CHECK(g.commute(1, 5));
  CHECK(g.conj(1, 2) == 2);
}

TEST_CASE("products use the left-factor-major index") {
  const FiniteGroup a = build_cyclic(3), b = build_cyclic(2);
  const FiniteGroup p = build_product(a, b);
  CHECK(p.order() == 6);
  // (i, j) has index 2 i + j; multiplication is componentwise.
  for (int i1 = 0; i1 < 3; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          CHECK(p.mul(2 * i1 + j1, 2 * i2 + j2) ==
                2 * ((i1 + i2) % 3) + (j1 + j2) % 2);
}

TEST_CASE("symmetric group multiplies one-line permutations by composition") {
  const FiniteGroup s3 = build_symmetric(3);
  CHECK(s3.order() == 6);
  // Lexicographic one-line order: 012, 021, 102, 120, 201, 210.
  // (102) after (021): 0 -> 1, 1 -> 2, 2 -> 0, which is 120.
  CHECK(s3.mul(2, 1) == 3);
  CHECK(s3.mul(1, 2) == 4);
  // Transpositions square to the identity.
  for (const int t : {1, 2, 5}) CHECK(s3.mul(t, t) == 0);
  // The two 3-cycles are mutually inverse.
  CHECK(s3.mul(3, 4) == 0);
  CHECK(build_symmetric(4).order() == 24);
  CHECK(build_symmetric(5).order() == 120);
}

TEST_CASE("dihedral groups satisfy the reflection relations") {
  const int n = 4;
  const FiniteGroup d = build_dihedral(n);
  CHECK(d.order() == 2 * n);
  const int r = 1, s = n;
  // r has order n, s is an involution, and s r s = r^{-1}.
  int acc = 0;
  for (int i = 0; i < n; ++i) acc = d.mul(r, acc);
  CHECK(acc == 0);
  CHECK(d.mul(s, s) == 0);
  CHECK(d.mul(s, d.mul(r, s)) == d.inv(r));
}

TEST_CASE("group construction rejects broken tables") {
  // Not closed / no identity: a 2x2 table with a constant row.
  CHECK_THROWS_AS(FiniteGroup("bad", {0, 0, 0, 0}), std::invalid_argument);
  // Non-associative magma on 3 elements (subtraction mod 3 is not associative).
  std::vector<int> sub(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) sub[3 * a + b] = ((a - b) % 3 + 3) % 3;
  CHECK_THROWS_AS(FiniteGroup("sub", std::move(sub)), std::invalid_argument);
}

TEST_CASE("conjugacy classes of the symmetric group on three letters") {
  const FiniteGroup s3 = build_symmetric(3);
  const auto classes = s3.conjugacy_classes();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<int>{0});
  CHECK(classes[1] == std::vector<int>{1, 2, 5});
  CHECK(classes[2] == std::vector<int>{3, 4});
}

TEST_CASE("centralizers embed with the identity first") {
  const FiniteGroup s3 = build_symmetric(3);
  const Subgroup ce = s3.centralizer(0);
  CHECK(ce.group.order() == 6);
  const Subgroup ct = s3.centralizer(1);
  CHECK(ct.group.order() == 2);
  CHECK(ct.embedding == std::vector<int>{0, 1});
  const Subgroup cr = s3.centralizer(3);
  CHECK(cr.group.order() == 3);
  CHECK(cr.embedding == std::vector<int>{0, 3, 4});
  // The embedding is a homomorphism.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(cr.embedding[cr.group.mul(a, b)] ==
            s3.mul(cr.embedding[a], cr.embedding[b]));
}

TEST_CASE("commuting tuple counts match the class equation") {
  const FiniteGroup s3 = build_symmetric(3);
  const auto pairs = s3.commuting_tuples(2);
  CHECK(pairs.size() == 18);  // sum over g of |C(g)| = 6 + 3*2 + 2*3
  // Burnside: #classes = #commuting pairs / |G|.
  CHECK(pairs.size() / s3.order() == s3.conjugacy_classes().size());
  CHECK(s3.commuting_tuples(3).size() == 48);
  // Lexicographic enumeration.
  CHECK(pairs.front() == std::vector<int>{0, 0});
  std::set<std::vector<int>> distinct(pairs.begin(), pairs.end());
  CHECK(distinct.size() == pairs.size());
  // Abelian groups: every tuple commutes.
  const FiniteGroup k4 = build_product(build_cyclic(2), build_cyclic(2));
  CHECK(k4.commuting_tuples(2).size() == 16);
  CHECK(k4.commuting_tuples(3).size() == 64);
}

TEST_CASE("registry specs build the advertised groups") {
  CHECK(builtins::make_group("cyclic:5").order() == 5);
  CHECK(builtins::make_group("symmetric:4").order() == 24);
  CHECK(builtins::make_group("dihedral:6").order() == 12);
  const FiniteGroup e8 = builtins::make_group("product:cyclic:2,cyclic:2,cyclic:2");
  CHECK(e8.order() == 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(e8.mul(a, b) == (a ^ b));
  CHECK(builtins::is_group_spec("cyclic:3"));
  CHECK_FALSE(builtins::is_group_spec("group.json"));
  CHECK_THROWS_AS(builtins::make_group("cyclic:0"), std::invalid_argument);
  CHECK_THROWS_AS(builtins::make_group("symmetric:9"), std::invalid_argument);
  CHECK_THROWS_AS(builtins::make_group("product:cyclic:2"), std::invalid_argument);
  CHECK_THROWS_AS(builtins::make_group("nonsense:3"), std::invalid_argument);
}

}  // TEST_SUITE("group")
