#include <algorithm>

#include "doctest.h"
#include "support.hpp"

#include "crlen/constructions.hpp"
#include "crlen/corpus.hpp"
#include "crlen/oracle.hpp"

using namespace crlen;

TEST_CASE("normal subgroup lattices of small groups") {
  const Semigroup z4 = parse_builtin("cyclic(4)");
  const auto z4_lattice = oracle::all_normal_subgroups(as_group(z4));
  REQUIRE(z4_lattice.size() == 3);  // a chain
  CHECK(z4_lattice.all_normals[0].order() == 1);
  CHECK(z4_lattice.all_normals[1].order() == 2);
  CHECK(z4_lattice.all_normals[2].order() == 4);

  const Semigroup s3 = parse_builtin("symmetric(3)");
  CHECK(oracle::all_normal_subgroups(as_group(s3)).size() == 3);

  const Semigroup v4 = parse_builtin("klein4");
  CHECK(oracle::all_normal_subgroups(as_group(v4)).size() == 5);

  const Semigroup s4 = parse_builtin("symmetric(4)");
  CHECK(oracle::all_normal_subgroups(as_group(s4)).size() == 4);

  try {
    oracle::all_normal_subgroups(as_group(s4), 10);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}

TEST_CASE("minimal normal subgroups agree with the lattice minimal members") {
  for (const auto& entry : corpus::group_corpus(16)) {
    const Subgroup g = as_group(entry.sg);
    const auto lattice = oracle::all_normal_subgroups(g);
    std::vector<NormalSubgroup> from_lattice;
    for (int i = 0; i < lattice.size(); ++i) {
      if (lattice.all_normals[i].trivial()) continue;
      bool minimal = true;
      for (int j = 0; j < lattice.size(); ++j) {
        if (i != j && !lattice.all_normals[j].trivial() && lattice.leq[j][i]) {
          minimal = false;
        }
      }
      if (minimal) from_lattice.push_back(lattice.all_normals[i]);
    }
    CHECK_MESSAGE(from_lattice == minimal_normal_subgroups(g), entry.name);
  }
}

TEST_CASE("join irreducible elements of semilattices") {
  const Semigroup chain = chain_semilattice(3);
  CHECK(oracle::join_irreducibles(chain) == std::vector<Elem>{1, 2});

  const Semigroup square = boolean_lattice(2);
  // the two atoms 01 and 10
  CHECK(oracle::join_irreducibles(square) == std::vector<Elem>{1, 2});

  const Semigroup singleton = chain_semilattice(1);
  CHECK(oracle::join_irreducibles(singleton).empty());

  const Semigroup z2 = parse_builtin("cyclic(2)");
  CHECK_THROWS_AS(oracle::join_irreducibles(z2), Error);
}

TEST_CASE("meet irreducible normal subgroups with their covers") {
  const Semigroup z4sg = parse_builtin("cyclic(4)");
  const Subgroup z4 = as_group(z4sg);
  const auto z4_pairs =
      oracle::meet_irreducible_normals(z4, oracle::all_normal_subgroups(z4));
  REQUIRE(z4_pairs.size() == 2);
  CHECK(z4_pairs[0].first.order() == 1);
  CHECK(z4_pairs[0].second.order() == 2);
  CHECK(z4_pairs[1].first.order() == 2);
  CHECK(z4_pairs[1].second.order() == 4);

  // in V_4 the trivial subgroup has three minimal covers, so it is NOT meet
  // irreducible; the three order-2 subgroups each have the full group as
  // their unique cover
  const Semigroup v4sg = parse_builtin("klein4");
  const Subgroup v4 = as_group(v4sg);
  const auto v4_pairs =
      oracle::meet_irreducible_normals(v4, oracle::all_normal_subgroups(v4));
  REQUIRE(v4_pairs.size() == 3);
  for (const auto& [m, cover] : v4_pairs) {
    CHECK(m.order() == 2);
    CHECK(cover.order() == 4);
  }

  // a simple group: only the trivial subgroup is meet irreducible
  const Semigroup z5sg = parse_builtin("cyclic(5)");
  const Subgroup z5 = as_group(z5sg);
  const auto z5_pairs =
      oracle::meet_irreducible_normals(z5, oracle::all_normal_subgroups(z5));
  REQUIRE(z5_pairs.size() == 1);
  CHECK(z5_pairs[0].first.trivial());
}

TEST_CASE("exhaustive generation counts") {
  const Semigroup v4sg = parse_builtin("klein4");
  const Subgroup v4 = as_group(v4sg);
  CHECK(oracle::exhaustive_min_normal_gen(v4, full_subgroup(v4)) == 2);
  CHECK(oracle::exhaustive_min_normal_gen(v4, trivial_subgroup(v4)) == 0);

  const Semigroup s3sg = parse_builtin("symmetric(3)");
  const Subgroup s3 = as_group(s3sg);
  const NormalSubgroup a3 =
      normal_from_elements(s3, testing::even_permutation_carrier(s3sg));
  CHECK(oracle::exhaustive_min_normal_gen(s3, a3) == 1);

  try {
    oracle::exhaustive_min_normal_gen(v4, full_subgroup(v4), 10);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}

TEST_CASE("pruned and exhaustive searches agree on the corpus") {
  for (const auto& entry : corpus::group_corpus(12)) {
    const Subgroup g = as_group(entry.sg);
    const auto lattice = oracle::all_normal_subgroups(g);
    for (const NormalSubgroup& n : lattice.all_normals) {
      CHECK_MESSAGE(min_normal_generators(g, n).k ==
                        oracle::exhaustive_min_normal_gen(g, n),
                    entry.name);
    }
  }
}

TEST_CASE("Dilworth counts match on the corpus") {
  for (const auto& entry : corpus::group_corpus(16)) {
    const Subgroup g = as_group(entry.sg);
    CHECK_MESSAGE(
        oracle::dilworth_check(g, oracle::all_normal_subgroups(g)),
        entry.name);
  }
}

TEST_CASE("equivalence cross-checks on the named triples") {
  const Semigroup s4sg = parse_builtin("symmetric(4)");
  const Subgroup s4 = as_group(s4sg);
  const SocleData socle4 = socle_data(s4);
  // V_4 is the socle of S_4 and a minimal normal subgroup, so one element
  // normally generates it
  const auto report =
      oracle::crosscheck_equivalences(s4, socle4.socle, 0);
  CHECK(report.k_socle_cap == 1);
  CHECK(report.k_optimized == 1);

  const Semigroup s3sg = parse_builtin("symmetric(3)");
  const Subgroup s3 = as_group(s3sg);
  const NormalSubgroup a3 =
      normal_from_elements(s3, testing::even_permutation_carrier(s3sg));
  const auto r33 = oracle::crosscheck_equivalences(s3, a3, 3);
  CHECK(!r33.exists_by_divisibility);
  CHECK(!r33.exists_by_pcore);

  const Semigroup a5sg = parse_builtin("alternating(5)");
  const Subgroup a5 = as_group(a5sg);
  for (int p : {0, 2, 3, 5}) {
    const auto r5 = oracle::crosscheck_equivalences(a5, full_subgroup(a5), p);
    CHECK(r5.k_socle_cap == 1);
    CHECK(r5.t_cap_nontrivial);
    CHECK(r5.k_abelian_cap == 0);
    CHECK(r5.exists_by_divisibility);
  }
}
