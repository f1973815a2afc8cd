#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "crlen/constructions.hpp"
#include "crlen/green.hpp"
#include "crlen/oracle.hpp"

using namespace crlen;

TEST_CASE("semilattices from posets") {
  const Semigroup chain = chain_semilattice(3);
  CHECK(chain.size() == 3);
  for (Elem x = 0; x < 3; ++x) {
    CHECK(chain.is_idempotent(x));
    for (Elem y = 0; y < 3; ++y) {
      CHECK(chain.product(x, y) == chain.product(y, x));
      CHECK(chain.product(x, y) == std::min(x, y));
    }
  }

  const Semigroup square = boolean_lattice(2);
  CHECK(square.size() == 4);
  CHECK(square.product(1, 2) == 0);
  CHECK(square.product(3, 1) == 1);

  // the natural order of the built semilattice reproduces the input poset
  PosetSpec diamond;
  diamond.n = 4;
  diamond.covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const Semigroup dsg = build_semilattice(diamond);
  auto leq = [&](Elem x, Elem y) { return dsg.product(x, y) == x; };
  CHECK(leq(0, 3));
  CHECK(leq(1, 3));
  CHECK(!leq(1, 2));
  CHECK(!leq(2, 1));

  PosetSpec antichain;
  antichain.n = 2;
  try {
    build_semilattice(antichain);
    FAIL("expected NoMeet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_meet);
  }

  PosetSpec cycle;
  cycle.n = 2;
  cycle.covers = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(build_semilattice(cycle), Error);
}

TEST_CASE("coset monoid sizes") {
  const Semigroup z2 = parse_builtin("cyclic(2)");
  CHECK(build_coset_monoid(as_group(z2)).sg.size() == 3);

  const Semigroup z4 = parse_builtin("cyclic(4)");
  const CosetMonoid q4 = build_coset_monoid(as_group(z4));
  CHECK(q4.sg.size() == 7);  // 4 singletons + 2 cosets of Z/2 + the group

  const Semigroup trivial = parse_builtin("trivial");
  CHECK(build_coset_monoid(as_group(trivial)).sg.size() == 1);
}

TEST_CASE("coset monoid idempotents are the normal subgroups") {
  for (const char* expr : {"cyclic(6)", "symmetric(3)", "quaternion8"}) {
    const Semigroup base = parse_builtin(expr);
    const Subgroup g = as_group(base);
    const CosetMonoid qg = build_coset_monoid(g);
    const auto lattice = oracle::all_normal_subgroups(g);
    std::set<std::vector<Elem>> idempotent_sets;
    for (Elem x = 0; x < qg.sg.size(); ++x) {
      if (qg.sg.is_idempotent(x)) idempotent_sets.insert(qg.coset_elements[x]);
    }
    std::set<std::vector<Elem>> normal_sets;
    for (const NormalSubgroup& n : lattice.all_normals) {
      normal_sets.insert(n.ambient_elements(g));
    }
    CHECK_MESSAGE(idempotent_sets == normal_sets, expr);
  }
}

TEST_CASE("group union quotient semigroups") {
  const Semigroup s3sg = parse_builtin("symmetric(3)");
  const Subgroup s3 = as_group(s3sg);
  const Semigroup s =
      build_group_union_quotient(s3, testing::even_permutation_carrier(s3sg));
  CHECK(s.size() == 8);

  const Semigroup z4sg = parse_builtin("cyclic(4)");
  const Subgroup z4 = as_group(z4sg);
  const Semigroup s2 = build_group_union_quotient(z4, {0, 2});
  CHECK(s2.size() == 6);

  // the quotient part is a regular J-class whose maximal subgroup is G/N
  const GreenData green = compute_green(s);
  const int ideal_class = green.j_class_of[6];
  CHECK(green.j_classes[ideal_class].elements == std::vector<Elem>{6, 7});
  CHECK(green.j_classes[ideal_class].regular);
  CHECK(maximal_subgroup(s, green, ideal_class).order() == 2);
  // and really is an ideal
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem c : {6, 7}) {
      CHECK(s.product(x, c) >= 6);
      CHECK(s.product(c, x) >= 6);
    }
  }

  try {
    build_group_union_quotient(z4, {0, 1, 2, 3});
    FAIL("expected NotProperNontrivial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_proper_nontrivial);
  }
  CHECK_THROWS_AS(build_group_union_quotient(z4, {0}), Error);
}

TEST_CASE("matrix monoids over small fields") {
  const Semigroup m22 = build_matrix_monoid(2, 2);
  CHECK(m22.size() == 16);
  REQUIRE(m22.identity());

  const Semigroup m13 = build_matrix_monoid(1, 3);
  CHECK(m13.size() == 3);
  const GreenData g13 = compute_green(m13);
  CHECK(maximal_subgroup(m13, g13, g13.j_class_of[*m13.identity()]).order() == 2);

  CHECK(build_matrix_monoid(2, 3).size() == 81);
  CHECK(build_matrix_monoid(2, 4).size() == 256);
  CHECK(build_matrix_monoid(2, 5).size() == 625);

  // J-classes of M_2(F_2): zero, rank one, units
  const GreenData green = compute_green(m22);
  std::multiset<size_t> sizes;
  for (const JClass& jc : green.j_classes) sizes.insert(jc.elements.size());
  CHECK(sizes == std::multiset<size_t>{1, 9, 6});

  try {
    build_matrix_monoid(3, 2);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
  try {
    build_matrix_monoid(2, 7);
    FAIL("expected UnsupportedFieldSize");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_field_size);
  }
}

TEST_CASE("builtin groups") {
  CHECK(builtin_group("symmetric", {3}).size() == 6);
  CHECK(builtin_group("alternating", {4}).size() == 12);
  CHECK(builtin_group("dihedral", {6}).size() == 12);
  CHECK(builtin_group("cyclic", {1}).size() == 1);

  const Semigroup v4 = builtin_group("elementary_abelian", {2, 2});
  CHECK(v4.size() == 4);
  CHECK(builtin_group("klein4", {}).same_table(v4));

  const Semigroup q8 = builtin_group("quaternion8", {});
  CHECK(q8.size() == 8);
  const auto mins = minimal_normal_subgroups(as_group(q8));
  REQUIRE(mins.size() == 1);  // the centre {1, -1} is the unique minimal normal
  CHECK(mins[0].order() == 2);
  CHECK(mins[0].ambient_elements(as_group(q8)) == std::vector<Elem>{0, 1});

  const Semigroup d4 = builtin_group("dihedral", {4});
  CHECK(d4.size() == 8);
  CHECK(!as_group(d4).is_abelian());

  try {
    builtin_group("symmetric", {6});
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_name);
  }
  CHECK_THROWS_AS(builtin_group("monster", {}), Error);
  CHECK_THROWS_AS(builtin_group("elementary_abelian", {4, 2}), Error);
}

TEST_CASE("builtin expression parsing") {
  CHECK(parse_builtin("QG(cyclic(4))").size() == 7);
  CHECK(parse_builtin("M(2,2)").size() == 16);
  CHECK(parse_builtin(" product( cyclic(2), cyclic(3) ) ").size() == 6);
  CHECK(parse_builtin("chain(5)").size() == 5);
  CHECK(parse_builtin("boolean(3)").size() == 8);
  CHECK(parse_builtin("T(3)").size() == 27);
  CHECK(parse_builtin("union_quotient(symmetric(3), alternating(3))").size() == 8);
  CHECK(parse_builtin("union_quotient(cyclic(4), cyclic(2))").size() == 6);

  CHECK_THROWS_AS(parse_builtin("cyclic(4) extra"), Error);
  CHECK_THROWS_AS(parse_builtin("QG(cyclic(4)"), Error);
  CHECK_THROWS_AS(parse_builtin(""), Error);
  // V_4 has three normal subgroups of order 2 and identical labels cannot
  // disambiguate them
  CHECK_THROWS_AS(parse_builtin("union_quotient(klein4, cyclic(2))"), Error);
}
