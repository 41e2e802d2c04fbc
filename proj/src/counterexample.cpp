#include "tolrep/counterexample.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tolrep {

BinRel ex_theta(const ExAlgebraSpec& spec) {
  if (spec.n < 1) throw input_error("counterexample universe must be nonempty");
  BinRel theta = BinRel::diagonal(spec.n);
  for (auto [a, b] : spec.theta_pairs) {
    if (a < 0 || a >= spec.n || b < 0 || b >= spec.n)
      throw input_error("theta pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ") outside the universe");
    theta.set(a, b);
    theta.set(b, a);
  }
  return theta;
}

FiniteAlgebra build_ex_algebra(const ExAlgebraSpec& spec, const std::string& name) {
  const BinRel theta = ex_theta(spec);
  if (theta.is_transitive())
    throw input_error("construction requires non-transitivity of theta");
  const int n = spec.n;
  if (n > 20)
    throw resource_error("2^" + std::to_string(n) + " unary maps per pair", 1ull << n);

  std::vector<Operation> ops;
  std::map<std::vector<int>, std::string> seen;
  auto add = [&](std::vector<int> table, std::string op_name) {
    auto [it, fresh] = seen.emplace(table, op_name);
    (void)it;
    if (fresh) ops.push_back(Operation{std::move(op_name), 1, std::move(table)});
  };

  // diagonal pairs contribute the constant maps
  for (int a = 0; a < n; ++a)
    add(std::vector<int>(static_cast<std::size_t>(n), a), "c" + std::to_string(a));

  // every unordered off-diagonal Θ-pair {a,b}: all maps into {a,b}
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!theta.at(a, b)) continue;
      for (std::uint32_t code = 0; code < (1u << n); ++code) {
        std::vector<int> table(static_cast<std::size_t>(n));
        std::string bits(static_cast<std::size_t>(n), '0');
        for (int x = 0; x < n; ++x) {
          const bool hi = code >> x & 1;
          table[static_cast<std::size_t>(x)] = hi ? b : a;
          bits[static_cast<std::size_t>(x)] = hi ? '1' : '0';
        }
        add(std::move(table),
            "f" + std::to_string(a) + "_" + std::to_string(b) + "_" + bits);
      }
    }

  return FiniteAlgebra(name.empty() ? "ex" + std::to_string(n) : name, n,
                       std::move(ops));
}

namespace {

// Image-of-congruence search in A^k through coordinate projections: all
// subalgebras (exhaustive when the power is small, else bounded generator
// sets), all congruences of each, every surjective coordinate projection.
struct PowerSearchResult {
  bool exhaustive = false;
  std::uint64_t candidates = 0;
  bool found = false;
  std::string detail;
};

PowerSearchResult search_power_for_image(const FiniteAlgebra& a, const BinRel& theta,
                                         int k, int generator_bound,
                                         const SearchOptions& search) {
  PowerSearchResult result;
  const FiniteAlgebra pk = power(a, k, search.size_budget);

  std::set<std::vector<int>> subuniverses;
  if (pk.size() <= 16) {
    result.exhaustive = true;
    for (std::uint32_t mask = 1; mask < (1u << pk.size()); ++mask) {
      std::vector<int> seed;
      for (int e = 0; e < pk.size(); ++e)
        if (mask >> e & 1) seed.push_back(e);
      std::vector<int> closed = subuniverse_closure(pk, seed);
      if (!closed.empty()) subuniverses.insert(std::move(closed));
    }
  } else {
    std::vector<int> comb;
    for (int size = 1; size <= generator_bound; ++size) {
      comb.assign(static_cast<std::size_t>(size), 0);
      for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
      for (;;) {
        std::vector<int> closed = subuniverse_closure(pk, comb);
        if (!closed.empty()) subuniverses.insert(std::move(closed));
        int i = size - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == pk.size() - size + i)
          --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
          comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  for (const std::vector<int>& universe : subuniverses) {
    const FiniteAlgebra sub = subalgebra(pk, universe);
    for (int coord = 0; coord < k; ++coord) {
      std::vector<int> map(universe.size());
      std::vector<char> hit(static_cast<std::size_t>(a.size()), 0);
      for (std::size_t i = 0; i < universe.size(); ++i) {
        const auto tuple = decode_tuple(static_cast<std::uint64_t>(universe[i]),
                                        a.size(), k);
        map[i] = tuple[static_cast<std::size_t>(coord)];
        hit[static_cast<std::size_t>(map[i])] = 1;
      }
      if (std::find(hit.begin(), hit.end(), 0) != hit.end()) continue;
      Hom proj(sub, a, map);
      if (!proj.is_hom())
        throw contradiction_error("coordinate projection failed the hom check");
      for (const BinRel& beta : enumerate_congruences(sub)) {
        ++result.candidates;
        if (image_of_relation(proj, beta) == theta) {
          result.found = true;
          std::ostringstream os;
          os << "subalgebra of " << a.name() << "^" << k << " with "
             << universe.size() << " elements, coordinate " << coord
             << ", congruence with " << beta.count() << " pairs";
          result.detail = os.str();
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace

ExReport verify_ex_properties(const FiniteAlgebra& ex, const BinRel& theta,
                              const ExOptions& opts) {
  ExReport report;
  report.theta_is_tolerance = is_tolerance(ex, theta);
  if (!report.theta_is_tolerance)
    throw contradiction_error("counterexample theta is not a tolerance");

  report.principal_closures_contain_theta = true;
  for (int x = 0; x < ex.size(); ++x)
    for (int y = 0; y < ex.size(); ++y) {
      if (x == y) continue;
      ++report.principal_pairs_checked;
      const BinRel closure = compatible_reflexive_closure(ex, {{x, y}});
      if (!closure.contains(theta)) {
        report.principal_closures_contain_theta = false;
        throw contradiction_error("principal closure of (" + std::to_string(x) +
                                  "," + std::to_string(y) +
                                  ") does not contain theta");
      }
    }

  const BinRel square = compose(theta, theta);
  report.theta_strictly_below_square = square.contains(theta) && square != theta;
  if (!report.theta_strictly_below_square)
    throw contradiction_error("theta∘theta does not strictly contain theta");

  const RepDecision rd = is_representable(ex, theta, opts.search);
  if (const NonRepCertificate* nc = refutation(rd)) {
    report.representable = false;
    report.rep_stats = nc->stats;
    report.rep_exhausted = nc->exhausted;
  } else {
    throw contradiction_error("counterexample theta decided representable");
  }

  const WeakRepDecision wd = is_weakly_representable(ex, theta, opts.search);
  if (refutation(wd))
    report.weakly_representable = false;
  else
    throw contradiction_error("counterexample theta decided weakly representable");

  report.power_bound = opts.power_bound;
  report.power_search_exhaustive = true;
  for (int k = 2; k <= opts.power_bound; ++k) {
    const PowerSearchResult r = search_power_for_image(ex, theta, k,
                                                       opts.generator_bound,
                                                       opts.search);
    report.power_candidates_checked += r.candidates;
    report.power_search_exhaustive = report.power_search_exhaustive && r.exhaustive;
    if (r.found) {
      report.power_witness_found = true;
      report.power_witness_detail = r.detail;
      break;
    }
  }
  return report;
}

}  // namespace tolrep
