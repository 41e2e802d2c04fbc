#include <random>

#include "doctest.h"
#include "tolrep/catalog.hpp"
#include "tolrep/naive.hpp"
#include "tolrep/relations.hpp"

using namespace tolrep;

namespace {

const FiniteAlgebra& c3() { return *find_in_catalog("C3"); }

}  // namespace

TEST_CASE("diagonal and full relation are compatible with every catalog algebra") {
  for (const CatalogEntry& e : catalog()) {
    CHECK(is_compatible(e.algebra, BinRel::diagonal(e.algebra.size())));
    CHECK(is_compatible(e.algebra, BinRel::full(e.algebra.size())));
  }
}

TEST_CASE("incompatibility reports a genuine violation") {
  BinRel r = BinRel::diagonal(3);
  r.set(0, 2);
  r.set(2, 0);
  CompatibilityViolation v;
  REQUIRE_FALSE(is_compatible(c3(), r, &v));
  // the witness must be checkable: applying the op to the rows lands outside R
  REQUIRE(v.op_index >= 0);
  const int arity = c3().op(v.op_index).arity;
  REQUIRE(static_cast<int>(v.argument_pairs.size()) == arity);
  std::vector<int> xs, ys;
  for (auto [x, y] : v.argument_pairs) {
    xs.push_back(x);
    ys.push_back(y);
    CHECK(r.at(x, y));
  }
  CHECK(c3().apply(v.op_index, xs) == v.image.first);
  CHECK(c3().apply(v.op_index, ys) == v.image.second);
  CHECK_FALSE(r.at(v.image.first, v.image.second));
}

TEST_CASE("classification of the running C3 relations") {
  CHECK(classify(c3(), BinRel::diagonal(3)).congruence());

  const BinRel theta = path_tolerance(3);
  const RelClass tc = classify(c3(), theta);
  CHECK(tc.tolerance());
  CHECK_FALSE(tc.congruence());  // (0,2) missing breaks transitivity

  BinRel leq(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) leq.set(a, b);
  const RelClass oc = classify(c3(), leq);
  CHECK(oc.compatible);
  CHECK(oc.reflexive);
  CHECK(oc.transitive);
  CHECK_FALSE(oc.symmetric);
}

TEST_CASE("nullary operations require their constant's diagonal pair") {
  const FiniteAlgebra pointed("pointed", 2, {Operation{"e", 0, {1}}});
  BinRel only_zero(2);
  only_zero.set(0, 0);
  CompatibilityViolation v;
  CHECK_FALSE(is_compatible(pointed, only_zero, &v));
  CHECK(v.image == std::pair<int, int>{1, 1});
  BinRel with_one(2);
  with_one.set(1, 1);
  CHECK(is_compatible(pointed, with_one));
}

TEST_CASE("compose example from the chain") {
  BinRel r = BinRel::diagonal(3);
  r.set(0, 1);
  r.set(1, 2);
  CHECK(compose(r, r.converse()) == path_tolerance(3));
}

TEST_CASE("compatible reflexive closure: fixpoint values on C3") {
  CHECK(compatible_reflexive_closure(c3(), std::vector<std::pair<int, int>>{}) ==
        BinRel::diagonal(3));

  BinRel expected = BinRel::diagonal(3);
  expected.set(0, 1);
  CHECK(compatible_reflexive_closure(c3(), {{0, 1}}) == expected);

  // meets against the diagonal drag (0,2) down to (0,1), then symmetry and
  // compatibility fill everything up
  CHECK(tolerance_closure(c3(), {{0, 2}}) == BinRel::full(3));
  CHECK(congruence_closure(c3(), {{0, 2}}) == BinRel::full(3));

  BinRel sym01 = BinRel::diagonal(3);
  sym01.set(0, 1);
  sym01.set(1, 0);
  CHECK(tolerance_closure(c3(), {{0, 1}}) == sym01);
  CHECK(congruence_closure(c3(), {{0, 1}}) == sym01);  // already transitive
}

TEST_CASE("closures satisfy their predicates and contain their seeds") {
  std::mt19937 rng(2024);
  for (const char* key : {"C3", "N5", "Z3", "EX3"}) {
    const FiniteAlgebra& a = *find_in_catalog(key);
    for (int trial = 0; trial < 25; ++trial) {
      BinRel seed(a.size());
      for (int k = 0; k < 2; ++k)
        seed.set(static_cast<int>(rng() % a.size()),
                 static_cast<int>(rng() % a.size()));
      const BinRel crc = compatible_reflexive_closure(a, seed);
      CHECK(crc.contains(seed));
      CHECK(crc.is_reflexive());
      CHECK(is_compatible(a, crc));
      const BinRel tol = tolerance_closure(a, seed);
      CHECK(tol.contains(seed));
      CHECK(is_tolerance(a, tol));
      CHECK(tol.contains(crc));
      const BinRel cong = congruence_closure(a, seed);
      CHECK(is_congruence(a, cong));
      CHECK(cong.contains(tol));
    }
  }
}

TEST_CASE("closure is monotone in the generators") {
  std::mt19937 rng(555);
  const FiniteAlgebra& n5 = *find_in_catalog("N5");
  for (int trial = 0; trial < 50; ++trial) {
    BinRel small(n5.size()), large(n5.size());
    for (int k = 0; k < 3; ++k) {
      const int a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5);
      large.set(a, b);
      if (k < 2) small.set(a, b);
    }
    CHECK(compatible_reflexive_closure(n5, large)
              .contains(compatible_reflexive_closure(n5, small)));
    CHECK(tolerance_closure(n5, large).contains(tolerance_closure(n5, small)));
  }
}

TEST_CASE("closure equals the least enumerated member containing the seed") {
  std::mt19937 rng(77);
  for (const char* key : {"C3", "Z2", "N5"}) {
    const FiniteAlgebra& a = *find_in_catalog(key);
    const std::vector<BinRel> tols = enumerate_tolerances(a);
    for (int trial = 0; trial < 20; ++trial) {
      BinRel seed(a.size());
      seed.set(static_cast<int>(rng() % a.size()), static_cast<int>(rng() % a.size()));
      std::vector<BinRel> above;
      const BinRel sym_seed = symmetric_closure(seed) | BinRel::diagonal(a.size());
      for (const BinRel& t : tols)
        if (t.contains(sym_seed)) above.push_back(t);
      REQUIRE_FALSE(above.empty());
      CHECK(tolerance_closure(a, seed) == intersect(above));
    }
  }
}

TEST_CASE("tolerance enumeration: frozen catalog values and oracle agreement") {
  const std::pair<const char*, std::pair<int, int>> expected[] = {
      // {key, {tolerances, congruences}} — frozen from the naive filter
      {"C2", {2, 2}}, {"C3", {5, 4}},  {"C4", {14, 8}}, {"N5", {5, 5}},
      {"M3", {2, 2}}, {"Z2", {2, 2}},  {"Z3", {2, 2}},  {"EX3", {3, 2}},
  };
  for (const auto& [key, counts] : expected) {
    const FiniteAlgebra& a = *find_in_catalog(key);
    const std::vector<BinRel> tols = enumerate_tolerances(a);
    const std::vector<BinRel> congs = enumerate_congruences(a);
    CHECK_MESSAGE(static_cast<int>(tols.size()) == counts.first, key);
    CHECK_MESSAGE(static_cast<int>(congs.size()) == counts.second, key);
    CHECK(tols == naive::all_tolerances(a));
    CHECK(congs == naive::all_congruences(a));
    // congruences are exactly the transitive tolerances
    std::vector<BinRel> transitive;
    for (const BinRel& t : tols)
      if (t.is_transitive()) transitive.push_back(t);
    CHECK(transitive == congs);
  }
}

TEST_CASE("the five tolerances of the three-element chain, in canonical order") {
  const std::vector<BinRel> tols = enumerate_tolerances(c3());
  REQUIRE(tols.size() == 5);
  CHECK(tols[0] == BinRel::diagonal(3));
  BinRel t01 = BinRel::diagonal(3);
  t01.set(0, 1);
  t01.set(1, 0);
  CHECK(tols[1] == t01);
  BinRel t12 = BinRel::diagonal(3);
  t12.set(1, 2);
  t12.set(2, 1);
  CHECK(tols[2] == t12);
  CHECK(tols[3] == path_tolerance(3));
  CHECK(tols[4] == BinRel::full(3));
}

TEST_CASE("one-element algebra has the single trivial tolerance") {
  const FiniteAlgebra one = power(c3(), 0);
  const std::vector<BinRel> tols = enumerate_tolerances(one);
  REQUIRE(tols.size() == 1);
  CHECK(tols[0] == BinRel::full(1));
  CHECK(enumerate_congruences(one) == tols);
}

TEST_CASE("power and product of the chain have the same tolerance count") {
  const FiniteAlgebra pw = power(c3(), 2);
  const FiniteAlgebra pr = product(c3(), c3());
  CHECK(enumerate_tolerances(pw).size() == enumerate_tolerances(pr).size());
}

TEST_CASE("intersection of tolerances is their meet in the tolerance lattice") {
  const FiniteAlgebra pr = product(c3(), c3());
  const std::vector<BinRel> tols = enumerate_tolerances(pr);
  REQUIRE(tols.size() >= 4);
  for (std::size_t i = 1; i < tols.size(); i += tols.size() / 4)
    for (std::size_t j = 0; j < i; j += 2) {
      const BinRel meet = intersect({tols[i], tols[j]});
      CHECK(is_tolerance(pr, meet));
      // the largest enumerated tolerance below both is the intersection
      BinRel best = BinRel::diagonal(pr.size());
      for (const BinRel& t : tols)
        if (tols[i].contains(t) && tols[j].contains(t) && t.contains(best)) best = t;
      CHECK(best == meet);
    }
}

TEST_CASE("enumeration respects the relation budget") {
  EnumOptions opts;
  opts.max_relations = 3;
  CHECK_THROWS_AS(enumerate_tolerances(*find_in_catalog("C4"), opts), resource_error);
}

TEST_CASE("EX3 principal closure of any off-diagonal pair swallows theta") {
  const FiniteAlgebra& ex3 = *find_in_catalog("EX3");
  const BinRel theta = path_tolerance(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == y) continue;
      CHECK(compatible_reflexive_closure(ex3, {{x, y}}).contains(theta));
    }
}
