#include <algorithm>

#include "doctest.h"
#include "support.hpp"

#include "json.hpp"

#include "crlen/analyzer.hpp"
#include "crlen/constructions.hpp"
#include "crlen/corpus.hpp"
#include "crlen/oracle.hpp"
#include "crlen/zmud.hpp"

using namespace crlen;

TEST_CASE("the full matrix monoid has a faithful irreducible representation") {
  const Semigroup m = build_matrix_monoid(2, 2);
  for (int p : {0, 2, 3, 5, 7}) {
    const AnalysisReport report = analyze(m, p);
    CHECK(report.exists);
    CHECK(report.k_total == 1);
    CHECK(rhodes_irreducible_check(m, p));
  }
}

TEST_CASE("the Boolean lattice on two atoms needs two constituents") {
  const Semigroup s = boolean_lattice(2);
  const AnalysisReport report = analyze(s, 0);
  CHECK(report.exists);
  CHECK(report.k_total == 2);
}

TEST_CASE("the group-with-quotient motivating example") {
  const Semigroup s =
      parse_builtin("union_quotient(symmetric(3), alternating(3))");
  const AnalysisReport r0 = analyze(s, 0);
  CHECK(r0.exists);
  CHECK(r0.k_total == 2);
  CHECK(r0.obstruction_primes == std::vector<int>{2, 3});

  const AnalysisReport r5 = analyze(s, 5);
  CHECK(r5.exists);
  CHECK(r5.k_total == 2);

  CHECK(!analyze(s, 2).exists);
  CHECK(!analyze(s, 3).exists);

  const auto primes = obstruction_primes(s);
  REQUIRE(primes);
  CHECK(*primes == std::vector<int>{2, 3});
}

TEST_CASE("the coset monoid of the cyclic group of order four") {
  const Semigroup s = parse_builtin("QG(cyclic(4))");
  const AnalysisReport r0 = analyze(s, 0);
  CHECK(r0.exists);
  CHECK(r0.k_total == 2);
  const AnalysisReport r2 = analyze(s, 2);
  CHECK(!r2.exists);
  CHECK(!r2.k_total);
  CHECK(r2.ggm_trivial);
  CHECK(r2.obstruction_primes == std::vector<int>{2});
}

TEST_CASE("minimum faithful lengths of groups viewed as semigroups") {
  const Semigroup v4 = parse_builtin("klein4");
  CHECK(min_faithful_cr_length(v4, 0) == 2);
  CHECK(!min_faithful_cr_length(v4, 2));

  const Semigroup trivial = parse_builtin("trivial");
  CHECK(min_faithful_cr_length(trivial, 0) == 0);
}

TEST_CASE("irreducible-representation checks") {
  const Semigroup v4 = parse_builtin("klein4");
  CHECK(!rhodes_irreducible_check(v4, 0));

  const Semigroup chain = chain_semilattice(3);
  CHECK(!rhodes_irreducible_check(chain, 0));

  const Semigroup trivial = parse_builtin("trivial");
  CHECK(rhodes_irreducible_check(trivial, 0));
  CHECK(rhodes_irreducible_check(trivial, 2));

  const Semigroup q8 = parse_builtin("quaternion8");
  CHECK(rhodes_irreducible_check(q8, 0));
  CHECK(!rhodes_irreducible_check(q8, 2));
}

TEST_CASE("a group's report matches the relativized count with the floor") {
  for (const auto& entry : corpus::group_corpus(16)) {
    if (entry.sg.size() == 1) continue;
    const Subgroup g = as_group(entry.sg);
    for (int p : {0, 2, 3}) {
      const AnalysisReport report = analyze(entry.sg, p);
      const ZmudResult z = zmud_number(g, full_subgroup(g), p);
      CHECK_MESSAGE(report.exists == z.exists, entry.name);
      if (z.exists) {
        CHECK_MESSAGE(*report.k_total == std::max(1, *z.k), entry.name);
      }
      REQUIRE(report.rows.size() == 1);
      CHECK(report.rows[0].irreducible);
      CHECK(report.rows[0].nj_order == entry.sg.size());
    }
  }
}

TEST_CASE("semilattice lengths count the join irreducible elements") {
  for (const auto& entry : corpus::semilattice_corpus()) {
    const auto joins = oracle::join_irreducibles(entry.sg);
    const auto k = min_faithful_cr_length(entry.sg, 0);
    REQUIRE_MESSAGE(k.has_value(), entry.name);
    CHECK_MESSAGE(*k == static_cast<int>(joins.size()), entry.name);
  }
}

TEST_CASE("coset monoid lengths count the meet irreducible normal subgroups") {
  for (const char* expr :
       {"cyclic(4)", "cyclic(6)", "symmetric(3)", "klein4", "dihedral(4)",
        "quaternion8"}) {
    const Semigroup base = parse_builtin(expr);
    const Subgroup g = as_group(base);
    const auto meet_irr = oracle::meet_irreducible_normals(
        g, oracle::all_normal_subgroups(g));
    const CosetMonoid qg = build_coset_monoid(g);
    const auto k = min_faithful_cr_length(qg.sg, 0);
    REQUIRE_MESSAGE(k.has_value(), expr);
    CHECK_MESSAGE(*k == static_cast<int>(meet_irr.size()), expr);
  }
}

TEST_CASE("report structure invariants across the corpus") {
  for (const auto& entry : corpus::full_corpus(12)) {
    const AnalysisReport report = analyze(entry.sg, 0);
    if (report.exists) CHECK_MESSAGE(report.ggm_trivial, entry.name);
    CHECK(report.exists == report.k_total.has_value());
    int sum = 0;
    for (const JRow& row : report.rows) {
      if (row.irreducible) {
        CHECK(row.k_j >= 1);
      } else {
        CHECK(row.k_j == 0);
      }
      sum += row.k_j;
    }
    if (report.k_total) CHECK(*report.k_total == sum);
  }
}

TEST_CASE("reports lacking existence still explain themselves") {
  const Semigroup null2 = build_from_cayley({{0, 0}, {0, 0}});
  const AnalysisReport report = analyze(null2, 0);
  CHECK(!report.exists);
  CHECK(!report.ggm_trivial);
  REQUIRE(report.ggm_witness);
  CHECK(*report.ggm_witness == std::make_pair(0, 1));
  CHECK(!obstruction_primes(null2));
}

TEST_CASE("json reports are deterministic and round-trip byte-identically") {
  const Semigroup s = parse_builtin("QG(cyclic(4))");
  const std::string once = report_to_json(analyze(s, 2));
  const std::string twice = report_to_json(analyze(s, 2));
  CHECK(once == twice);

  const auto parsed = nlohmann::ordered_json::parse(once);
  CHECK(parsed.dump(2) + "\n" == once);
  CHECK(parsed["exists"] == false);
  CHECK(parsed["k_total"].is_null());
  CHECK(parsed["char"] == 2);
  CHECK(parsed["rows"].size() == 3);

  const std::string good = report_to_json(analyze(s, 0));
  const auto parsed_good = nlohmann::ordered_json::parse(good);
  CHECK(parsed_good["k_total"] == 2);
}

TEST_CASE("analyze validates the characteristic") {
  const Semigroup s = parse_builtin("trivial");
  CHECK_THROWS_AS(analyze(s, 4), Error);
  CHECK_THROWS_AS(analyze(s, -3), Error);
  CHECK_NOTHROW(analyze(s, 13));
}
