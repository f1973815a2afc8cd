#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "crlen/cayley_io.hpp"
#include "crlen/constructions.hpp"

using namespace crlen;

TEST_CASE("cayley round trip preserves table and labels") {
  const Semigroup s = parse_builtin("QG(cyclic(4))");
  std::stringstream buffer;
  write_cayley(buffer, s);
  const Semigroup back = read_cayley(buffer);
  CHECK(back.same_table(s));
  CHECK(back.labels() == s.labels());
}

TEST_CASE("cayley file without labels gets index labels") {
  std::stringstream in("2\n0 1\n1 0\n");
  const Semigroup s = read_cayley(in);
  CHECK(s.size() == 2);
  CHECK(s.label(1) == "1");
}

TEST_CASE("cayley parse failures") {
  std::stringstream missing_row("3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(read_cayley(missing_row), Error);
  std::stringstream bad_header("x\n");
  CHECK_THROWS_AS(read_cayley(bad_header), Error);
  std::stringstream short_labels("1\n0\nlabels:\n");
  CHECK_THROWS_AS(read_cayley(short_labels), Error);
  std::stringstream bad_entry("2\n0 1\n1 7\n");
  CHECK_THROWS_AS(read_cayley(bad_entry), Error);
}

TEST_CASE("transformation files close into semigroups") {
  std::stringstream in("3\n1 2 0\n1 0 2\n0 0 2\n");
  const auto gens = read_transformations(in);
  REQUIRE(gens.size() == 3);
  CHECK(closure_from_transformations(gens).size() == 27);

  std::stringstream wrong_len("3\n1 2\n");
  CHECK_THROWS_AS(read_transformations(wrong_len), Error);
}

TEST_CASE("load_semigroup_file dispatches on the extension") {
  {
    std::ofstream f("/tmp/crlen_t2.gens");
    f << "2\n0 0\n1 0\n";
  }
  const Semigroup t2 = load_semigroup_file("/tmp/crlen_t2.gens");
  CHECK(t2.size() == 4);

  {
    std::ofstream f("/tmp/crlen_z2.cayley");
    f << "2\n0 1\n1 0\n";
  }
  const Semigroup z2 = load_semigroup_file("/tmp/crlen_z2.cayley");
  CHECK(z2.size() == 2);
  CHECK(z2.identity() == 0);
  std::remove("/tmp/crlen_t2.gens");
  std::remove("/tmp/crlen_z2.cayley");
}
