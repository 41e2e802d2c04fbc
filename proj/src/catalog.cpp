#include "tolrep/catalog.hpp"

#include "tolrep/counterexample.hpp"
#include "tolrep/representability.hpp"

namespace tolrep {

namespace {

FiniteAlgebra chain(const std::string& name, int n) {
  Operation join{"join", 2, {}};
  Operation meet{"meet", 2, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      join.table.push_back(a > b ? a : b);
      meet.table.push_back(a < b ? a : b);
    }
  return FiniteAlgebra(name, n, {std::move(join), std::move(meet)});
}

FiniteAlgebra lattice_from_order(const std::string& name, int n,
                                 const std::vector<std::pair<int, int>>& covers) {
  // order = reflexive-transitive closure of the covers
  BinRel leq = BinRel::diagonal(n);
  for (auto [a, b] : covers) leq.set(a, b);
  leq = transitive_closure(leq);
  auto upper = [&](int a, int b) {
    for (int c = 0; c < n; ++c)
      if (leq.at(a, c) && leq.at(b, c)) {
        bool least = true;
        for (int d = 0; d < n && least; ++d)
          if (leq.at(a, d) && leq.at(b, d) && !leq.at(c, d)) least = false;
        if (least) return c;
      }
    throw contradiction_error("cover list does not define a lattice (no join)");
  };
  auto lower = [&](int a, int b) {
    for (int c = n - 1; c >= 0; --c)
      if (leq.at(c, a) && leq.at(c, b)) {
        bool greatest = true;
        for (int d = 0; d < n && greatest; ++d)
          if (leq.at(d, a) && leq.at(d, b) && !leq.at(d, c)) greatest = false;
        if (greatest) return c;
      }
    throw contradiction_error("cover list does not define a lattice (no meet)");
  };
  Operation join{"join", 2, {}};
  Operation meet{"meet", 2, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      join.table.push_back(upper(a, b));
      meet.table.push_back(lower(a, b));
    }
  return FiniteAlgebra(name, n, {std::move(join), std::move(meet)});
}

FiniteAlgebra cyclic_group(const std::string& name, int n) {
  Operation mul{"mul", 2, {}};
  Operation inv{"inv", 1, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul.table.push_back((a + b) % n);
  for (int a = 0; a < n; ++a) inv.table.push_back((n - a) % n);
  return FiniteAlgebra(name, n, {std::move(mul), std::move(inv)});
}

void check_group(const FiniteAlgebra& g) {
  const int n = g.size();
  auto mul = [&](int a, int b) {
    const int args[2] = {a, b};
    return g.apply_unchecked(0, args, 2);
  };
  auto inv = [&](int a) { return g.apply_unchecked(1, &a, 1); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw contradiction_error("catalog group '" + g.name() +
                                    "' is not associative");
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0)
    throw contradiction_error("catalog group '" + g.name() + "' has no identity");
  for (int a = 0; a < n; ++a)
    if (mul(a, inv(a)) != identity || mul(inv(a), a) != identity)
      throw contradiction_error("catalog group '" + g.name() +
                                "' has a broken inverse");
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"C2", chain("C2", 2), "two-element chain"});
  entries.push_back({"C3", chain("C3", 3), "three-element chain"});
  entries.push_back({"C4", chain("C4", 4), "four-element chain"});
  entries.push_back({"N5",
                     lattice_from_order("N5", 5,
                                        {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}),
                     "pentagon: 0 bottom, 1 < 2 on one side, 3 on the other, 4 top"});
  entries.push_back({"M3",
                     lattice_from_order("M3", 5,
                                        {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
                     "diamond: three atoms between bottom 0 and top 4"});
  entries.push_back({"Z2", cyclic_group("Z2", 2), "cyclic group of order 2"});
  entries.push_back({"Z3", cyclic_group("Z3", 3), "cyclic group of order 3"});
  entries.push_back({"EX3",
                     build_ex_algebra(ExAlgebraSpec{3, {{0, 1}, {1, 2}}}, "EX3"),
                     "unary counterexample algebra, theta = diagonal + {01, 12}"});

  // structural self-checks
  for (const CatalogEntry& e : entries) {
    if (e.key == "Z2" || e.key == "Z3")
      check_group(e.algebra);
    else if (e.key != "EX3")
      lattice_order(e.algebra);  // throws unless the axioms hold
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const FiniteAlgebra* find_in_catalog(std::string_view key) {
  for (const CatalogEntry& e : catalog())
    if (e.key == key) return &e.algebra;
  return nullptr;
}

BinRel path_tolerance(int n) {
  BinRel t = BinRel::diagonal(n);
  for (int i = 0; i + 1 < n; ++i) {
    t.set(i, i + 1);
    t.set(i + 1, i);
  }
  return t;
}

}  // namespace tolrep
