#include <sstream>

#include "doctest.h"
#include "tolrep/catalog.hpp"
#include "tolrep/io.hpp"
#include "tolrep/permutability.hpp"
#include "tolrep/representability.hpp"

using namespace tolrep;

TEST_CASE("algebra files round-trip") {
  for (const CatalogEntry& e : catalog()) {
    std::stringstream buffer;
    write_algebra(buffer, e.algebra);
    const FiniteAlgebra back = parse_algebra(buffer, e.key);
    CHECK(back.name() == e.algebra.name());
    CHECK(structurally_equal(back, e.algebra));
  }
}

TEST_CASE("algebra parsing: comments, whitespace, and errors with line numbers") {
  std::istringstream good(
      "# the two-element chain\n"
      "algebra C2\n"
      "size 2\n"
      "op join 2\n"
      "0 1   # top row continues\n"
      "1 1\n"
      "op meet 2\n"
      "0 0 0 1\n");
  const FiniteAlgebra a = parse_algebra(good, "good.alg");
  CHECK(a.size() == 2);
  CHECK(a.ops().size() == 2);
  CHECK(a.apply(0, {0, 1}) == 1);

  std::istringstream empty_universe("algebra X\nsize 0\n");
  CHECK_THROWS_WITH_AS(parse_algebra(empty_universe, "x.alg"),
                       doctest::Contains("x.alg:2"), input_error);

  std::istringstream bad_entry("algebra X\nsize 2\nop f 1\n0\n7\n");
  CHECK_THROWS_WITH_AS(parse_algebra(bad_entry, "x.alg"),
                       doctest::Contains("x.alg:5"), input_error);

  std::istringstream truncated("algebra X\nsize 2\nop f 2\n0 1\n");
  CHECK_THROWS_AS(parse_algebra(truncated, "x.alg"), input_error);

  std::istringstream not_op("algebra X\nsize 2\nfoo\n");
  CHECK_THROWS_WITH_AS(parse_algebra(not_op, "x.alg"), doctest::Contains("op"),
                       input_error);
}

TEST_CASE("relation files: explicit pairs and the reflexive directive") {
  std::istringstream with_directive(
      "rel theta\n"
      "size 3\n"
      "reflexive\n"
      "0 1\n"
      "1 0\n"
      "1 2\n"
      "2 1\n");
  const NamedRelation nr = parse_relation(with_directive, "theta.rel");
  CHECK(nr.name == "theta");
  CHECK(nr.rel == path_tolerance(3));

  std::stringstream round;
  write_relation(round, nr.rel, "theta");
  const NamedRelation back = parse_relation(round, "round.rel");
  CHECK(back.rel == nr.rel);

  std::istringstream out_of_range("rel r\nsize 2\n0 5\n");
  CHECK_THROWS_WITH_AS(parse_relation(out_of_range, "r.rel"),
                       doctest::Contains("r.rel:3"), input_error);

  std::istringstream dangling("rel r\nsize 2\n0\n");
  CHECK_THROWS_AS(parse_relation(dangling, "r.rel"), input_error);
}

TEST_CASE("format_pairs is row-major") {
  BinRel r(3);
  r.set(2, 0);
  r.set(0, 1);
  CHECK(format_pairs(r) == "(0,1) (2,0)");
}

TEST_CASE("catalog sanity") {
  CHECK(catalog().size() == 8);
  const FiniteAlgebra* n5 = find_in_catalog("N5");
  REQUIRE(n5);
  CHECK(n5->size() == 5);
  CHECK(find_in_catalog("nope") == nullptr);

  // the N5 encoding from the key: 1 < 2, 3 incomparable to both
  const BinRel order = lattice_order(*n5);
  CHECK(order.at(1, 2));
  CHECK_FALSE(order.at(2, 1));
  CHECK_FALSE(order.at(1, 3));
  CHECK_FALSE(order.at(3, 1));
  CHECK(order.at(0, 4));

  CHECK(check_tolerances_are_congruences(*find_in_catalog("Z2")).all_congruences);
}

TEST_CASE("every catalog lattice passes lattice_order; groups do not") {
  for (const char* key : {"C2", "C3", "C4", "N5", "M3"})
    CHECK_NOTHROW(lattice_order(*find_in_catalog(key)));
  for (const char* key : {"Z2", "Z3", "EX3"})
    CHECK_THROWS_AS(lattice_order(*find_in_catalog(key)), input_error);
}
