#include <random>

#include "doctest.h"
#include "tolrep/algebra.hpp"
#include "tolrep/catalog.hpp"
#include "tolrep/relations.hpp"

using namespace tolrep;

TEST_CASE("construction validates tables") {
  CHECK_THROWS_AS(FiniteAlgebra("bad", 0, {}), input_error);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {Operation{"f", 1, {0}}}), input_error);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {Operation{"f", 1, {0, 2}}}), input_error);
  const FiniteAlgebra ok("ok", 2, {Operation{"f", 1, {1, 0}}});
  CHECK(ok.size() == 2);
}

TEST_CASE("apply_op on the catalog") {
  const FiniteAlgebra& z2 = *find_in_catalog("Z2");
  CHECK(z2.apply(0, {1, 1}) == 0);  // 1+1 = 0 mod 2

  const FiniteAlgebra& c3 = *find_in_catalog("C3");
  CHECK(c3.apply(0, {0, 2}) == 2);  // join with the top of the chain

  const FiniteAlgebra& n5 = *find_in_catalog("N5");
  // hand-checked against the pentagon Hasse diagram
  CHECK(n5.apply(1, {1, 3}) == 0);
  CHECK(n5.apply(0, {1, 3}) == 4);
  CHECK(n5.apply(0, {1, 2}) == 2);
  CHECK(n5.apply(1, {2, 3}) == 0);

  CHECK_THROWS_AS(c3.apply(0, {0}), input_error);
  CHECK_THROWS_AS(c3.apply(0, {0, 3}), input_error);
  CHECK_THROWS_AS(c3.apply(5, {0, 0}), input_error);
}

TEST_CASE("product acts coordinatewise with the a*nB+b encoding") {
  const FiniteAlgebra& c2 = *find_in_catalog("C2");
  const FiniteAlgebra p = product(c2, c2);
  CHECK(p.size() == 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const int lhs = p.apply(0, {a * 2 + b, c * 2 + d});
          const int rhs = c2.apply(0, {a, c}) * 2 + c2.apply(0, {b, d});
          CHECK(lhs == rhs);
        }

  const FiniteAlgebra& c3 = *find_in_catalog("C3");
  const FiniteAlgebra p33 = product(c3, c3);
  // meet of the pairs (0,2) and (2,0), encoded 2 and 6, is (0,0) encoded 0
  CHECK(p33.apply(1, {2, 6}) == 0);

  const FiniteAlgebra& z2 = *find_in_catalog("Z2");
  CHECK_THROWS_AS(product(c3, z2), input_error);  // chain vs group: dissimilar
}

TEST_CASE("product with the empty power is the algebra itself") {
  for (const CatalogEntry& e : catalog()) {
    const FiniteAlgebra unit = power(e.algebra, 0);
    CHECK(unit.size() == 1);
    CHECK(structurally_equal(product(e.algebra, unit), e.algebra));
  }
}

TEST_CASE("powers compose bit-exactly with products") {
  const FiniteAlgebra& c2 = *find_in_catalog("C2");
  CHECK(power(c2, 3).size() == 8);
  const FiniteAlgebra& c3 = *find_in_catalog("C3");
  CHECK(structurally_equal(power(c3, 1), c3));
  CHECK(structurally_equal(power(c3, 2), product(c3, c3)));
}

TEST_CASE("power respects the size budget") {
  const FiniteAlgebra& c3 = *find_in_catalog("C3");
  try {
    power(c3, 20, 1000);
    FAIL("expected resource_error");
  } catch (const resource_error& e) {
    CHECK(e.computed_size > 1000);
  }
}

TEST_CASE("tuple codec round-trips") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int base = 2 + trial % 7;
    const int width = 1 + trial % 4;
    std::vector<int> tuple(width);
    for (int& v : tuple) v = static_cast<int>(rng() % base);
    CHECK(decode_tuple(encode_tuple(tuple, base), base, width) == tuple);
  }
}

TEST_CASE("subuniverse closure") {
  const FiniteAlgebra& c3 = *find_in_catalog("C3");
  CHECK(subuniverse_closure(c3, {0, 1, 2}) == std::vector<int>{0, 1, 2});
  CHECK(subuniverse_closure(c3, {0, 2}) == std::vector<int>{0, 2});

  const FiniteAlgebra& n5 = *find_in_catalog("N5");
  // 1∧3 = 0 and 1∨3 = 4 force both bounds in
  CHECK(subuniverse_closure(n5, {1, 3}) == std::vector<int>{0, 1, 3, 4});

  // no constants: the empty seed closes to nothing
  CHECK(subuniverse_closure(c3, {}).empty());

  // a nullary operation seeds its constant
  const FiniteAlgebra pointed("pointed", 3,
                              {Operation{"e", 0, {2}}, Operation{"f", 1, {1, 2, 2}}});
  CHECK(subuniverse_closure(pointed, {}) == std::vector<int>{2});
  CHECK(subuniverse_closure(pointed, {0}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("subalgebra restriction re-indexes tables") {
  const FiniteAlgebra& n5 = *find_in_catalog("N5");
  const FiniteAlgebra sub = subalgebra(n5, {0, 1, 3, 4});
  CHECK(sub.size() == 4);
  // join(1,3) = 4 in N5 maps to join(index 1, index 2) = index 3
  CHECK(sub.apply(0, {1, 2}) == 3);
  CHECK_THROWS_AS(subalgebra(n5, {1, 3}), contract_error);  // not closed
  CHECK_THROWS_AS(subalgebra(n5, {3, 1, 0, 4}), input_error);  // not sorted
}
