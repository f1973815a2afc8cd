#include <algorithm>

#include "doctest.h"
#include "support.hpp"

#include "crlen/constructions.hpp"
#include "crlen/corpus.hpp"
#include "crlen/green.hpp"
#include "crlen/group.hpp"
#include "crlen/oracle.hpp"

using namespace crlen;

TEST_CASE("verify_group accepts the H-class of an idempotent") {
  const Semigroup t3 = parse_builtin("T(3)");
  const GreenData green = compute_green(t3);
  for (const JClass& jc : green.j_classes) {
    if (!jc.regular) continue;
    const MaxSubgroup max = maximal_subgroup(t3, green, jc.id);
    const Subgroup g = verify_group(t3, max.carrier);
    CHECK(g.order() == max.order());
    CHECK(g.identity_elem() == max.e);
  }
}

TEST_CASE("verify_group accepts A_3 inside S_3") {
  const Semigroup s3 = parse_builtin("symmetric(3)");
  const Subgroup a3 = verify_group(s3, testing::even_permutation_carrier(s3));
  CHECK(a3.order() == 3);
  CHECK(a3.is_abelian());
}

TEST_CASE("verify_group rejects non-subgroups") {
  const Semigroup s3 = parse_builtin("symmetric(3)");
  // identity, one transposition, one 3-cycle: not closed
  std::vector<Elem> bad;
  for (Elem x = 0; x < 6; ++x) {
    if (s3.label(x) == "012" || s3.label(x) == "102" || s3.label(x) == "120") {
      bad.push_back(x);
    }
  }
  REQUIRE(bad.size() == 3);
  try {
    verify_group(s3, bad);
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_closed);
  }

  // a monoid that is not a group
  const Semigroup lz1 = adjoin_identity(build_from_cayley({{0, 0}, {1, 1}}));
  std::vector<Elem> all = {0, 1, 2};
  try {
    verify_group(lz1, all);
    FAIL("expected NoInverse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_inverse);
  }

  // a band with no identity at all
  const Semigroup lz = build_from_cayley({{0, 0}, {1, 1}});
  try {
    verify_group(lz, {0, 1});
    FAIL("expected NoIdentity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_identity);
  }
}

TEST_CASE("normal closures") {
  const Semigroup s3sg = parse_builtin("symmetric(3)");
  const Subgroup s3 = as_group(s3sg);

  CHECK(normal_closure(s3, {*s3sg.identity()}).order() == 1);

  // closure of a 3-cycle is A_3
  const auto even = testing::even_permutation_carrier(s3sg);
  const NormalSubgroup a3 = normal_closure(s3, {even[1]});
  CHECK(a3.ambient_elements(s3) == even);

  // closure of a transposition is everything
  Elem transposition = -1;
  for (Elem x = 0; x < 6; ++x) {
    if (std::find(even.begin(), even.end(), x) == even.end()) {
      transposition = x;
      break;
    }
  }
  CHECK(normal_closure(s3, {transposition}).order() == 6);

  const Semigroup v4sg = parse_builtin("klein4");
  const Subgroup v4 = as_group(v4sg);
  CHECK(normal_closure(v4, {1}).order() == 2);

  CHECK_THROWS_AS(normal_closure(s3, {17}), Error);
}

TEST_CASE("minimal normal subgroups of the standard examples") {
  const Semigroup s3sg = parse_builtin("symmetric(3)");
  const auto mins_s3 = minimal_normal_subgroups(as_group(s3sg));
  REQUIRE(mins_s3.size() == 1);
  CHECK(mins_s3[0].order() == 3);

  const Semigroup v4sg = parse_builtin("klein4");
  const auto mins_v4 = minimal_normal_subgroups(as_group(v4sg));
  REQUIRE(mins_v4.size() == 3);
  for (const auto& m : mins_v4) CHECK(m.order() == 2);

  const Semigroup z6sg = parse_builtin("cyclic(6)");
  const auto mins_z6 = minimal_normal_subgroups(as_group(z6sg));
  REQUIRE(mins_z6.size() == 2);
  CHECK(mins_z6[0].order() == 2);
  CHECK(mins_z6[1].order() == 3);

  const Semigroup trivial = parse_builtin("trivial");
  CHECK(minimal_normal_subgroups(as_group(trivial)).empty());
}

TEST_CASE("socle decompositions") {
  const Semigroup s4sg = parse_builtin("symmetric(4)");
  const SocleData s4 = socle_data(as_group(s4sg));
  CHECK(s4.a.order() == 4);  // the Klein four group of double transpositions
  CHECK(s4.t.order() == 1);
  CHECK(s4.socle.order() == 4);

  const Semigroup a5sg = parse_builtin("alternating(5)");
  const SocleData a5 = socle_data(as_group(a5sg));
  CHECK(a5.a.order() == 1);
  CHECK(a5.t.order() == 60);
  CHECK(a5.socle.order() == 60);

  const Semigroup z6sg = parse_builtin("cyclic(6)");
  const SocleData z6 = socle_data(as_group(z6sg));
  CHECK(z6.a.order() == 6);
  CHECK(z6.t.order() == 1);
}

TEST_CASE("socle intersections with a normal subgroup") {
  const Semigroup s3sg = parse_builtin("symmetric(3)");
  const Subgroup s3 = as_group(s3sg);
  const SocleData socle = socle_data(s3);

  const SocleIntersection full = intersect_with_normal(s3, socle, full_subgroup(s3));
  CHECK(full.s_cap == socle.socle);

  const NormalSubgroup a3 =
      normal_from_elements(s3, testing::even_permutation_carrier(s3sg));
  const SocleIntersection with_a3 = intersect_with_normal(s3, socle, a3);
  CHECK(with_a3.s_cap.order() == 3);

  const SocleIntersection trivial =
      intersect_with_normal(s3, socle, trivial_subgroup(s3));
  CHECK(trivial.s_cap.trivial());
  CHECK(trivial.a_cap.trivial());
  CHECK(trivial.t_cap.trivial());

  // a non-normal subgroup is rejected
  Elem transposition = -1;
  for (Elem x = 0; x < 6; ++x) {
    if (s3sg.product(x, x) == *s3sg.identity() && x != *s3sg.identity()) {
      transposition = x;
      break;
    }
  }
  NormalSubgroup bogus;
  bogus.members = {s3.local(*s3sg.identity()), s3.local(transposition)};
  std::sort(bogus.members.begin(), bogus.members.end());
  try {
    intersect_with_normal(s3, socle, bogus);
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_normal);
  }
}

TEST_CASE("sylow decomposition of abelian normal subgroups") {
  const Semigroup z6sg = parse_builtin("cyclic(6)");
  const Subgroup z6 = as_group(z6sg);
  const auto pieces = sylow_decompose(z6, full_subgroup(z6));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].p == 2);
  CHECK(pieces[0].carrier.order() == 2);
  CHECK(pieces[1].p == 3);
  CHECK(pieces[1].carrier.order() == 3);

  const Semigroup v4sg = parse_builtin("klein4");
  const Subgroup v4 = as_group(v4sg);
  const auto v4_pieces = sylow_decompose(v4, full_subgroup(v4));
  REQUIRE(v4_pieces.size() == 1);
  CHECK(v4_pieces[0].p == 2);
  CHECK(v4_pieces[0].carrier.order() == 4);

  CHECK(sylow_decompose(v4, trivial_subgroup(v4)).empty());

  const Semigroup s3sg = parse_builtin("symmetric(3)");
  const Subgroup s3 = as_group(s3sg);
  try {
    sylow_decompose(s3, full_subgroup(s3));
    FAIL("expected NotAbelian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_abelian);
  }
}

TEST_CASE("p-cores") {
  const Semigroup z6sg = parse_builtin("cyclic(6)");
  CHECK(p_core(as_group(z6sg), 2).order() == 2);
  CHECK(p_core(as_group(z6sg), 3).order() == 3);
  CHECK(p_core(as_group(z6sg), 5).order() == 1);

  const Semigroup s3sg = parse_builtin("symmetric(3)");
  CHECK(p_core(as_group(s3sg), 2).trivial());
  CHECK(p_core(as_group(s3sg), 3).order() == 3);

  const Semigroup s4sg = parse_builtin("symmetric(4)");
  CHECK(p_core(as_group(s4sg), 2).order() == 4);

  CHECK_THROWS_AS(p_core(as_group(z6sg), 6), Error);
}

TEST_CASE("minimum normal generator counts with witnesses") {
  const Semigroup v4sg = parse_builtin("klein4");
  const Subgroup v4 = as_group(v4sg);

  const GenerationResult trivial = min_normal_generators(v4, trivial_subgroup(v4));
  CHECK(trivial.k == 0);
  CHECK(trivial.witness.empty());

  const GenerationResult full = min_normal_generators(v4, full_subgroup(v4));
  CHECK(full.k == 2);
  // conjugation is trivial, so the search needs two plain generators; the
  // lexicographically smallest pair is (1, 2)
  CHECK(full.witness == std::vector<Elem>{1, 2});

  const Semigroup s3sg = parse_builtin("symmetric(3)");
  const Subgroup s3 = as_group(s3sg);
  const NormalSubgroup a3 =
      normal_from_elements(s3, testing::even_permutation_carrier(s3sg));
  const GenerationResult gen = min_normal_generators(s3, a3);
  CHECK(gen.k == 1);
  // smallest nontrivial element of A_3 generates
  CHECK(gen.witness == std::vector<Elem>{testing::even_permutation_carrier(s3sg)[1]});
  CHECK(normal_closure(s3, gen.witness) == a3);

  // non-normal target is rejected
  NormalSubgroup not_normal;
  not_normal.members = {0, 1};
  CHECK_THROWS_AS(min_normal_generators(s3, not_normal), Error);
}

TEST_CASE("the socle reduction agrees with the direct search") {
  const Semigroup z6sg = parse_builtin("cyclic(6)");
  const Subgroup z6 = as_group(z6sg);
  CHECK(min_normal_generators_reduced(z6, full_subgroup(z6)) == 1);

  const Semigroup a5sg = parse_builtin("alternating(5)");
  const Subgroup a5 = as_group(a5sg);
  CHECK(min_normal_generators_reduced(a5, full_subgroup(a5)) == 1);

  const Semigroup v4sg = parse_builtin("klein4");
  const Subgroup v4 = as_group(v4sg);
  CHECK(min_normal_generators_reduced(v4, full_subgroup(v4)) == 2);

  for (const auto& entry : corpus::group_corpus(16)) {
    const Subgroup g = as_group(entry.sg);
    const auto lattice = oracle::all_normal_subgroups(g);
    const SocleData socle = socle_data(g);
    for (const NormalSubgroup& n : lattice.all_normals) {
      const auto inter = intersect_with_normal(g, socle, n);
      CHECK_MESSAGE(min_normal_generators(g, inter.s_cap).k ==
                        min_normal_generators_reduced(g, n),
                    entry.name);
    }
  }
}

TEST_CASE("minimal normal complement property on the corpus") {
  for (const auto& entry : corpus::group_corpus(16)) {
    const Subgroup g = as_group(entry.sg);
    const auto lattice = oracle::all_normal_subgroups(g);
    for (const NormalSubgroup& m : minimal_normal_subgroups(g)) {
      for (const NormalSubgroup& n : lattice.all_normals) {
        const NormalSubgroup cap = intersect(m, n);
        const bool contained = cap == m;
        CHECK_MESSAGE((contained || cap.trivial()), entry.name);
        if (!contained) {
          // disjoint case: MN is the internal direct product M x N
          CHECK(join(g, m, n).order() == m.order() * n.order());
        }
      }
    }
  }
}

TEST_CASE("element orders and abelian detection") {
  const Semigroup q8sg = parse_builtin("quaternion8");
  const Subgroup q8 = as_group(q8sg);
  CHECK(!q8.is_abelian());
  CHECK(q8.element_order(q8.identity_local()) == 1);
  int max_order = 0;
  for (int x = 0; x < q8.order(); ++x) {
    max_order = std::max(max_order, q8.element_order(x));
  }
  CHECK(max_order == 4);
}
