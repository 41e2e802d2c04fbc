#include "doctest.h"
#include "tolrep/catalog.hpp"
#include "tolrep/naive.hpp"
#include "tolrep/representability.hpp"

using namespace tolrep;

namespace {

const FiniteAlgebra& c3() { return *find_in_catalog("C3"); }

}  // namespace

TEST_CASE("lattice order: chains, pentagon, rejection of groups") {
  BinRel chain(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) chain.set(a, b);
  CHECK(lattice_order(c3()) == chain);

  const BinRel n5_order = lattice_order(*find_in_catalog("N5"));
  CHECK(n5_order.count() == 13);
  CHECK(n5_order.at(1, 2));
  CHECK_FALSE(n5_order.at(1, 3));
  CHECK(n5_order.at(0, 4));

  CHECK_THROWS_AS(lattice_order(*find_in_catalog("Z2")), input_error);

  // named join/meet whose tables break idempotency
  const FiniteAlgebra fake("fake", 2,
                           {Operation{"join", 2, {0, 1, 1, 0}},
                            Operation{"meet", 2, {0, 0, 0, 1}}});
  CHECK_THROWS_AS(lattice_order(fake), input_error);
}

TEST_CASE("lattice witness on the running example") {
  const BinRel theta = path_tolerance(3);
  const RepCertificate cert = lattice_witness(c3(), theta);
  CHECK(cert.verified);
  BinRel expected = BinRel::diagonal(3);
  expected.set(0, 1);
  expected.set(1, 2);
  CHECK(cert.witness == expected);
  CHECK(compose(cert.witness, cert.witness.converse()) == theta);
  CHECK(cert.image == theta);
  CHECK(reverify(c3(), cert));
}

TEST_CASE("trivial tolerance gives the trivial witness") {
  for (const char* key : {"C2", "C3", "N5", "M3"}) {
    const FiniteAlgebra& lattice = *find_in_catalog(key);
    const RepCertificate cert =
        lattice_witness(lattice, BinRel::diagonal(lattice.size()));
    CHECK(cert.witness == BinRel::diagonal(lattice.size()));
    CHECK(cert.verified);
  }
}

TEST_CASE("every pentagon and diamond tolerance has a verified lattice witness") {
  for (const char* key : {"N5", "M3"}) {
    const FiniteAlgebra& lattice = *find_in_catalog(key);
    for (const BinRel& theta : enumerate_tolerances(lattice)) {
      const RepCertificate cert = lattice_witness(lattice, theta);
      CHECK(cert.verified);
      CHECK(reverify(lattice, cert));
    }
  }
}

TEST_CASE("representability decision: frozen chain example") {
  const RepDecision d = is_representable(c3(), path_tolerance(3));
  const RepCertificate* cert = certificate(d);
  REQUIRE(cert);
  BinRel expected = BinRel::diagonal(3);
  expected.set(0, 1);
  expected.set(1, 2);
  CHECK(cert->witness == expected);  // deterministic first hit in (|G|, lex) order
  CHECK(cert->stats.space == 16);
  CHECK(cert->stats.examined == 7);
  CHECK(cert->stats.pruned == 0);
  CHECK(cert->pair_alg.carrier_size() == 5);
}

TEST_CASE("decision is identical across worker counts") {
  SearchOptions serial, wide;
  serial.jobs = 1;
  wide.jobs = 4;
  for (const char* key : {"C3", "C4", "N5", "EX3"}) {
    const FiniteAlgebra& a = *find_in_catalog(key);
    for (const BinRel& theta : enumerate_tolerances(a)) {
      const RepDecision d1 = is_representable(a, theta, serial);
      const RepDecision d2 = is_representable(a, theta, wide);
      const RepCertificate* c1 = certificate(d1);
      const RepCertificate* c2 = certificate(d2);
      REQUIRE((c1 == nullptr) == (c2 == nullptr));
      if (c1) {
        CHECK(c1->witness == c2->witness);
        CHECK(c1->stats.examined == c2->stats.examined);
        CHECK(c1->stats.pruned == c2->stats.pruned);
      }
    }
  }
}

TEST_CASE("congruences are representable by themselves") {
  for (const char* key : {"Z2", "Z3"}) {
    const FiniteAlgebra& g = *find_in_catalog(key);
    for (const BinRel& theta : enumerate_congruences(g)) {
      const RepDecision d = is_representable(g, theta);
      const RepCertificate* cert = certificate(d);
      REQUIRE(cert);
      CHECK(compose(cert->witness, cert->witness.converse()) == theta);
    }
  }
}

TEST_CASE("non-tolerances are rejected as input") {
  BinRel not_symmetric = BinRel::diagonal(3);
  not_symmetric.set(0, 1);
  CHECK_THROWS_AS(is_representable(c3(), not_symmetric), input_error);
}

TEST_CASE("the counterexample tolerance is refused with exhausted statistics") {
  const FiniteAlgebra& ex3 = *find_in_catalog("EX3");
  const RepDecision d = is_representable(ex3, path_tolerance(3));
  const NonRepCertificate* nc = refutation(d);
  REQUIRE(nc);
  CHECK(nc->exhausted);
  CHECK(nc->stats.space == 16);
  CHECK(nc->stats.examined == 16);
  CHECK(nc->stats.pruned == 0);
}

TEST_CASE("search agrees with the naive oracle everywhere") {
  for (const CatalogEntry& e : catalog())
    for (const BinRel& theta : enumerate_tolerances(e.algebra)) {
      const bool main_says = certificate(is_representable(e.algebra, theta)) != nullptr;
      CHECK(main_says == naive::representable(e.algebra, theta));
    }
}

TEST_CASE("naive oracle agrees with a plain test-local subset filter") {
  // third route, nothing shared: Δ ⊆ R ⊆ Θ by explicit bit fiddling
  for (const char* key : {"C3", "Z2", "Z3", "EX3"}) {
    const FiniteAlgebra& a = *find_in_catalog(key);
    for (const BinRel& theta : enumerate_tolerances(a)) {
      std::vector<std::pair<int, int>> slots;
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
          if (x != y && theta.at(x, y)) slots.emplace_back(x, y);
      bool found = false;
      for (std::uint64_t mask = 0; mask < (1ull << slots.size()) && !found; ++mask) {
        BinRel r = BinRel::diagonal(a.size());
        for (std::size_t i = 0; i < slots.size(); ++i)
          if (mask >> i & 1) r.set(slots[i].first, slots[i].second);
        found = naive::compatible(a, r) &&
                naive::compose_direct(r, r.converse()) == theta;
      }
      CHECK(found == naive::representable(a, theta));
    }
  }
}

TEST_CASE("search budget reports progress") {
  SearchOptions opts;
  opts.max_examined = 2;
  CHECK_THROWS_AS(is_representable(*find_in_catalog("N5"), BinRel::full(5), opts),
                  resource_error);
}

TEST_CASE("equivalence chain verifies on every lattice certificate") {
  for (const char* key : {"C2", "C3", "C4", "N5", "M3"}) {
    const FiniteAlgebra& lattice = *find_in_catalog(key);
    for (const BinRel& theta : enumerate_tolerances(lattice)) {
      const RepCertificate cert = lattice_witness(lattice, theta);
      const ChainReport r = verify_equiv_chain(cert);
      CHECK(r.failures == 0);
      CHECK(r.pairs_checked == lattice.size() * lattice.size());
      const ImageTriple triple = rep_to_congruence_image(cert);
      CHECK(triple.subalgebra.carrier_size() == cert.witness.count());
    }
  }
}

TEST_CASE("chain log is available on request") {
  const RepCertificate cert = lattice_witness(c3(), path_tolerance(3));
  const ChainReport r = verify_equiv_chain(cert, true);
  CHECK(r.log.size() == 9);
}

TEST_CASE("witness extraction from an image presentation") {
  // B = Δ with Θ = Δ
  const PairAlgebra diag = subalgebra_on_pairs(c3(), BinRel::diagonal(3));
  const RepCertificate trivial =
      extract_witness_from_image(c3(), diag, BinRel::diagonal(3));
  CHECK(trivial.witness == BinRel::diagonal(3));

  // B = full square with Θ = ∇
  const PairAlgebra full = subalgebra_on_pairs(c3(), BinRel::full(3));
  const RepCertificate top = extract_witness_from_image(c3(), full, BinRel::full(3));
  CHECK(top.witness == BinRel::full(3));

  // round trip: the lattice construction's B recovers R = ≤ ∩ Θ
  const BinRel theta = path_tolerance(3);
  const RepCertificate built = lattice_witness(c3(), theta);
  const RepCertificate recovered =
      extract_witness_from_image(c3(), built.pair_alg, theta);
  CHECK(recovered.witness == built.witness);

  // named precondition failures
  BinRel no_diag(3);
  no_diag.set(0, 0);
  no_diag.set(1, 1);
  no_diag.set(0, 1);  // compatible, but (2,2) is missing
  const PairAlgebra b_partial = subalgebra_on_pairs(c3(), no_diag);
  CHECK_THROWS_WITH_AS(
      extract_witness_from_image(c3(), b_partial, BinRel::diagonal(3)),
      doctest::Contains("does not contain the diagonal"), input_error);

  BinRel diag_plus = BinRel::diagonal(3);
  diag_plus.set(0, 1);
  const PairAlgebra b_plus = subalgebra_on_pairs(c3(), diag_plus);
  CHECK_THROWS_WITH_AS(extract_witness_from_image(c3(), b_plus, BinRel::diagonal(3)),
                       doctest::Contains("image of the kernel differs"), input_error);
  CHECK_THROWS_WITH_AS(extract_witness_from_image(c3(), diag, theta),
                       doctest::Contains("image of the kernel differs"), input_error);
}

TEST_CASE("weak representability: representable inputs report lambda = 1") {
  for (const char* key : {"C2", "C3", "C4", "N5", "M3", "Z2", "Z3"}) {
    const FiniteAlgebra& a = *find_in_catalog(key);
    for (const BinRel& theta : enumerate_tolerances(a)) {
      const WeakRepDecision wd = is_weakly_representable(a, theta);
      const WeakRepCertificate* cert = certificate(wd);
      REQUIRE(cert);
      CHECK(cert->lambda == 1);
      CHECK(cert->family.front().theta == theta);
      REQUIRE(cert->power.has_value());
      CHECK(cert->power->image == theta);
      CHECK(cert->power->fully_materialized);
      CHECK(cert->verified);
    }
  }
}

TEST_CASE("weak representability: the counterexample is refused with a witness pair") {
  const FiniteAlgebra& ex3 = *find_in_catalog("EX3");
  const WeakRepDecision wd = is_weakly_representable(ex3, path_tolerance(3));
  const WeakRepNegative* neg = refutation(wd);
  REQUIRE(neg);
  CHECK(neg->representable_supersets.size() == 1);
  CHECK(neg->representable_supersets.front() == BinRel::full(3));
  CHECK(neg->intersection == BinRel::full(3));
  CHECK(neg->witness_pair == std::pair<int, int>{0, 2});
}

TEST_CASE("forced two-member family exercises the power construction") {
  const BinRel theta = path_tolerance(3);
  const RepCertificate c_theta = *certificate(is_representable(c3(), theta));
  const RepCertificate c_full = *certificate(is_representable(c3(), BinRel::full(3)));
  const PowerWitness pw = build_power_witness(c3(), theta, {c_theta, c_full});
  CHECK(pw.pair_alg.width() == 3);
  CHECK(pw.pair_alg.carrier_size() == 11);
  CHECK(pw.image == theta);
  CHECK(pw.fully_materialized);
  REQUIRE(pw.phi.has_value());
  CHECK(pw.phi->surjective());
  REQUIRE(pw.beta.has_value());
  CHECK(image_of_relation(*pw.phi, *pw.beta) == theta);
}

TEST_CASE("power witness over budget is flagged, not fatal") {
  SearchOptions tiny;
  tiny.size_budget = 2;
  const WeakRepDecision wd = is_weakly_representable(c3(), path_tolerance(3), tiny);
  const WeakRepCertificate* cert = certificate(wd);
  REQUIRE(cert);
  CHECK(cert->lambda == 1);
  CHECK_FALSE(cert->power.has_value());
  CHECK(cert->verified);
}

TEST_CASE("strong representation on chains and the counterexample") {
  // Δ with R = Δ
  const StrongRepResult trivial = check_strong_rep(c3(), BinRel::diagonal(3));
  REQUIRE(trivial.witness);
  CHECK(*trivial.witness == BinRel::diagonal(3));
  CHECK(check_eqm(c3(), BinRel::diagonal(3), *trivial.witness));

  const BinRel theta = path_tolerance(3);
  const StrongRepResult chain = check_strong_rep(c3(), theta);
  REQUIRE(chain.witness);
  const BinRel rc = chain.witness->converse();
  CHECK((compose(*chain.witness, rc) & compose(rc, *chain.witness)) == theta);

  const StrongRepResult refused = check_strong_rep(*find_in_catalog("EX3"), theta);
  CHECK_FALSE(refused.witness);
  CHECK(refused.exhausted);
}

TEST_CASE("lattice eq/eqm identities hold with the join/meet witnesses") {
  for (const char* key : {"C2", "C3", "C4", "N5", "M3"}) {
    const FiniteAlgebra& lattice = *find_in_catalog(key);
    for (const BinRel& theta : enumerate_tolerances(lattice)) {
      const LatticeEqmReport r = verify_lattice_eqm(lattice, theta);
      CHECK(r.eq_holds);
      CHECK(r.eqm_holds);
      CHECK(r.join_meet_witness_ok);
    }
  }
}

TEST_CASE("lattgen: the lattice order always passes") {
  for (const char* key : {"C2", "C3", "C4", "N5", "M3"}) {
    const FiniteAlgebra& lattice = *find_in_catalog(key);
    const LatticeOps lo = find_lattice_ops(lattice);
    const LattgenReport r =
        lattgen_check(lattice, lo.join, lo.meet, lattice_order(lattice));
    CHECK(r.passed());
    CHECK(r.tolerances_checked > 0);
  }
}

TEST_CASE("lattgen: M = Δ fails (2) at a=0, b=1 on the chain") {
  const LattgenReport r = lattgen_check(c3(), 0, 1, BinRel::diagonal(3));
  REQUIRE(r.violation);
  CHECK(r.violation->condition == "(2)");
  CHECK(r.violation->elements == std::vector<int>{0, 1});
}

TEST_CASE("lattgen: M = ∇ fails (3) at a=1, c=0 on the chain") {
  // frozen regression value: the checker's own verdict
  const LattgenReport r = lattgen_check(c3(), 0, 1, BinRel::full(3));
  REQUIRE(r.violation);
  CHECK(r.violation->condition == "(3)");
  CHECK(r.violation->elements == std::vector<int>{1, 0});
}

TEST_CASE("lattgen2: catalog lattices pass, misdeclared ops fail, arity guarded") {
  for (const char* key : {"C2", "C3", "C4", "N5", "M3"}) {
    const LattgenReport r = lattgen2_check(*find_in_catalog(key));
    CHECK(r.passed());
  }
  const FiniteAlgebra z2vee("Z2vee", 2,
                            {Operation{"join", 2, {0, 1, 1, 0}},
                             Operation{"meet", 2, {0, 1, 1, 0}}});
  const LattgenReport r = lattgen2_check(z2vee);
  REQUIRE(r.violation);
  CHECK(r.violation->condition == "(1)");
  CHECK(r.violation->elements == std::vector<int>{1});

  CHECK_THROWS_AS(lattgen2_check(*find_in_catalog("EX3")), input_error);
}
