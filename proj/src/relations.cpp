#include "tolrep/relations.hpp"

#include <set>
#include <sstream>

#include "tolrep/parallel.hpp"
#include "tolrep/tuple_iter.hpp"

namespace tolrep {

namespace {

void require_match(const FiniteAlgebra& a, const BinRel& r) {
  if (r.size() != a.size())
    throw contract_error("relation on " + std::to_string(r.size()) +
                         " elements does not fit algebra '" + a.name() +
                         "' of size " + std::to_string(a.size()));
}

BinRel rel_from_generators(int n, const std::vector<std::pair<int, int>>& gens) {
  BinRel r(n);
  for (auto [a, b] : gens) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw input_error("generator pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ") outside the universe");
    r.set(a, b);
  }
  return r;
}

}  // namespace

std::string CompatibilityViolation::describe(const FiniteAlgebra& a) const {
  std::ostringstream os;
  os << "operation '" << a.op(op_index).name << "' maps rows";
  for (auto [x, y] : argument_pairs) os << " (" << x << "," << y << ")";
  os << " to (" << image.first << "," << image.second << ") which is absent";
  return os.str();
}

bool is_compatible(const FiniteAlgebra& a, const BinRel& r,
                   CompatibilityViolation* violation) {
  require_match(a, r);
  const auto ps = r.pairs();
  std::vector<int> xs, ys;
  for (std::size_t i = 0; i < a.ops().size(); ++i) {
    const int k = a.ops()[i].arity;
    if (k == 0) {
      const int c = a.ops()[i].table[0];
      if (!r.at(c, c)) {
        if (violation) *violation = {static_cast<int>(i), {}, {c, c}};
        return false;
      }
      continue;
    }
    xs.assign(static_cast<std::size_t>(k), 0);
    ys.assign(static_cast<std::size_t>(k), 0);
    bool bad = false;
    for_each_tuple(ps.size(), k, [&](const std::vector<std::size_t>& t) {
      if (bad) return;
      for (int j = 0; j < k; ++j) {
        xs[static_cast<std::size_t>(j)] = ps[t[static_cast<std::size_t>(j)]].first;
        ys[static_cast<std::size_t>(j)] = ps[t[static_cast<std::size_t>(j)]].second;
      }
      const int fx = a.apply_unchecked(static_cast<int>(i), xs.data(), k);
      const int fy = a.apply_unchecked(static_cast<int>(i), ys.data(), k);
      if (!r.at(fx, fy)) {
        bad = true;
        if (violation) {
          violation->op_index = static_cast<int>(i);
          violation->argument_pairs.clear();
          for (int j = 0; j < k; ++j)
            violation->argument_pairs.push_back(ps[t[static_cast<std::size_t>(j)]]);
          violation->image = {fx, fy};
        }
      }
    });
    if (bad) return false;
  }
  return true;
}

RelClass classify(const FiniteAlgebra& a, const BinRel& r) {
  require_match(a, r);
  RelClass c;
  c.reflexive = r.is_reflexive();
  c.symmetric = r.is_symmetric();
  c.transitive = r.is_transitive();
  c.compatible = is_compatible(a, r);
  return c;
}

bool is_tolerance(const FiniteAlgebra& a, const BinRel& r) {
  return r.is_reflexive() && r.is_symmetric() && is_compatible(a, r);
}

bool is_congruence(const FiniteAlgebra& a, const BinRel& r) {
  return is_tolerance(a, r) && r.is_transitive();
}

BinRel compatible_reflexive_closure(const FiniteAlgebra& a, const BinRel& generators) {
  require_match(a, generators);
  BinRel r = generators | BinRel::diagonal(a.size());
  std::vector<int> xs, ys;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < a.ops().size(); ++i) {
      const int k = a.ops()[i].arity;
      if (k == 0) continue;  // (c,c) is already in Δ
      const auto ps = r.pairs();
      xs.assign(static_cast<std::size_t>(k), 0);
      ys.assign(static_cast<std::size_t>(k), 0);
      for_each_tuple(ps.size(), k, [&](const std::vector<std::size_t>& t) {
        for (int j = 0; j < k; ++j) {
          xs[static_cast<std::size_t>(j)] = ps[t[static_cast<std::size_t>(j)]].first;
          ys[static_cast<std::size_t>(j)] = ps[t[static_cast<std::size_t>(j)]].second;
        }
        const int fx = a.apply_unchecked(static_cast<int>(i), xs.data(), k);
        const int fy = a.apply_unchecked(static_cast<int>(i), ys.data(), k);
        if (!r.at(fx, fy)) {
          r.set(fx, fy);
          changed = true;
        }
      });
    }
  }
  return r;
}

BinRel compatible_reflexive_closure(const FiniteAlgebra& a,
                                    const std::vector<std::pair<int, int>>& generators) {
  return compatible_reflexive_closure(a, rel_from_generators(a.size(), generators));
}

BinRel tolerance_closure(const FiniteAlgebra& a, const BinRel& generators) {
  require_match(a, generators);
  BinRel r = symmetric_closure(generators) | BinRel::diagonal(a.size());
  for (;;) {
    BinRel next = symmetric_closure(compatible_reflexive_closure(a, r));
    if (next == r) return r;
    r = std::move(next);
  }
}

BinRel tolerance_closure(const FiniteAlgebra& a,
                         const std::vector<std::pair<int, int>>& generators) {
  return tolerance_closure(a, rel_from_generators(a.size(), generators));
}

BinRel congruence_closure(const FiniteAlgebra& a, const BinRel& generators) {
  require_match(a, generators);
  BinRel r = symmetric_closure(generators) | BinRel::diagonal(a.size());
  for (;;) {
    BinRel next = transitive_closure(
        symmetric_closure(compatible_reflexive_closure(a, r)));
    if (next == r) return r;
    r = std::move(next);
  }
}

BinRel congruence_closure(const FiniteAlgebra& a,
                          const std::vector<std::pair<int, int>>& generators) {
  return congruence_closure(a, rel_from_generators(a.size(), generators));
}

namespace {

std::vector<BinRel> enumerate_closed(
    const FiniteAlgebra& a, const EnumOptions& opts,
    BinRel (*close)(const FiniteAlgebra&, const BinRel&)) {
  const int n = a.size();
  std::set<BinRel, RelOrder> found;
  found.insert(BinRel::diagonal(n));

  std::vector<std::pair<int, int>> gens;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) gens.emplace_back(x, y);

  std::vector<BinRel> principal(gens.size());
  parallel_for(gens.size(), opts.jobs, [&](std::size_t i) {
    BinRel seed(n);
    seed.set(gens[i].first, gens[i].second);
    principal[i] = close(a, seed);
  });
  for (auto& p : principal) found.insert(std::move(p));

  // Saturate under pairwise joins; the final set is schedule-independent.
  std::vector<BinRel> items(found.begin(), found.end());
  for (std::size_t i = 1; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      BinRel join = close(a, items[i] | items[j]);
      if (found.insert(join).second) {
        items.push_back(std::move(join));
        if (found.size() > opts.max_relations)
          throw resource_error("relation enumeration exceeded the budget of " +
                                   std::to_string(opts.max_relations),
                               found.size());
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<BinRel> enumerate_tolerances(const FiniteAlgebra& a,
                                         const EnumOptions& opts) {
  return enumerate_closed(a, opts, [](const FiniteAlgebra& alg, const BinRel& g) {
    return tolerance_closure(alg, g);
  });
}

std::vector<BinRel> enumerate_congruences(const FiniteAlgebra& a,
                                          const EnumOptions& opts) {
  return enumerate_closed(a, opts, [](const FiniteAlgebra& alg, const BinRel& g) {
    return congruence_closure(alg, g);
  });
}

}  // namespace tolrep
