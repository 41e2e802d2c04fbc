#include "tolrep/representability.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "tolrep/parallel.hpp"

namespace tolrep {

namespace {

void require_tolerance(const FiniteAlgebra& a, const BinRel& theta) {
  if (theta.size() != a.size())
    throw input_error("relation size " + std::to_string(theta.size()) +
                      " does not match algebra '" + a.name() + "'");
  const RelClass c = classify(a, theta);
  if (!c.tolerance()) {
    std::string why = !c.reflexive    ? "not reflexive"
                      : !c.symmetric  ? "not symmetric"
                                      : "not compatible";
    throw input_error("relation is not a tolerance on '" + a.name() + "': " + why);
  }
}

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

RepCertificate build_certificate(const FiniteAlgebra& a, const BinRel& theta,
                                 const BinRel& witness, SearchStats stats) {
  PairAlgebra pa = subalgebra_on_pairs(a, witness);
  Hom phi = projection_hom(pa, 0);
  Hom pi2 = projection_hom(pa, 1);
  if (!phi.surjective())
    throw contradiction_error("first projection of a reflexive witness is not surjective");
  BinRel beta = kernel(pi2);
  BinRel image = image_of_relation(phi, beta);
  if (image != theta)
    throw contradiction_error("witness image differs from theta: the construction is broken");
  return RepCertificate{theta,          witness, std::move(pa), std::move(phi),
                        std::move(beta), std::move(image), true, stats};
}

// Layered subset search over the off-diagonal pairs of theta. Candidates of
// one layer never prune each other (a bad set only prunes strict supersets),
// so layers can be evaluated in parallel; reported counts follow the
// canonical order and are schedule-independent.
struct SearchOutcome {
  std::optional<BinRel> witness;
  SearchStats stats;
};

SearchOutcome search_witness(const FiniteAlgebra& a, const BinRel& theta,
                             const SearchOptions& opts,
                             const std::function<bool(const BinRel&)>& satisfies) {
  std::vector<std::pair<int, int>> gen;
  for (int x = 0; x < theta.size(); ++x)
    for (int y = 0; y < theta.size(); ++y)
      if (x != y && theta.at(x, y)) gen.emplace_back(x, y);
  const int m = static_cast<int>(gen.size());
  if (m > 62)
    throw resource_error("witness search space 2^" + std::to_string(m) +
                             " exceeds the representable range",
                         static_cast<std::uint64_t>(m));

  SearchStats stats;
  stats.space = 1ull << m;

  // layer 0: the empty generator set, closure Δ
  BinRel delta_closure = compatible_reflexive_closure(a, BinRel(a.size()));
  if (satisfies(delta_closure)) {
    stats.examined = 1;
    return {std::move(delta_closure), stats};
  }
  std::uint64_t examined = 1, pruned = 0;

  std::unordered_map<std::uint64_t, BinRel> prev_layer;
  prev_layer.emplace(0, std::move(delta_closure));
  std::vector<std::uint64_t> bad;

  struct Candidate {
    std::uint64_t mask = 0;
    std::uint64_t pruned_before = 0;  // within this layer, canonical order
    BinRel closure;
    bool within = false;
    bool ok = false;
  };

  for (int s = 1; s <= m; ++s) {
    // combinations of size s in lexicographic order
    std::vector<Candidate> todo;
    std::uint64_t layer_pruned = 0;
    std::vector<int> comb(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) comb[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::uint64_t mask = 0;
      for (int i : comb) mask |= 1ull << i;
      bool skip = false;
      for (std::uint64_t b : bad)
        if ((mask & b) == b) {
          skip = true;
          break;
        }
      if (skip)
        ++layer_pruned;
      else
        todo.push_back(Candidate{mask, layer_pruned, BinRel(), false, false});
      int i = s - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - s + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }

    if (examined + todo.size() > opts.max_examined)
      throw resource_error(
          "representability search budget exceeded: examined=" +
              std::to_string(examined) + " of space=" + std::to_string(stats.space),
          examined);

    parallel_for(todo.size(), opts.jobs, [&](std::size_t i) {
      Candidate& c = todo[i];
      // the parent (lowest bit dropped) was examined in the previous layer
      const std::uint64_t parent = c.mask & (c.mask - 1);
      const auto& base = prev_layer.at(parent);
      const auto [px, py] = gen[static_cast<std::size_t>(std::countr_zero(c.mask))];
      BinRel seed = base;
      seed.set(px, py);
      c.closure = compatible_reflexive_closure(a, seed);
      c.within = theta.contains(c.closure);
      c.ok = c.within && satisfies(c.closure);
    });

    std::unordered_map<std::uint64_t, BinRel> this_layer;
    for (std::size_t i = 0; i < todo.size(); ++i) {
      Candidate& c = todo[i];
      if (c.ok) {
        stats.examined = examined + i + 1;
        stats.pruned = pruned + c.pruned_before;
        return {std::move(c.closure), stats};
      }
      if (c.within)
        this_layer.emplace(c.mask, std::move(c.closure));
      else
        bad.push_back(c.mask);
    }
    examined += todo.size();
    pruned += layer_pruned;
    prev_layer = std::move(this_layer);
  }

  stats.examined = examined;
  stats.pruned = pruned;
  return {std::nullopt, stats};
}

}  // namespace

LatticeOps find_lattice_ops(const FiniteAlgebra& a) {
  LatticeOps lo;
  for (std::size_t i = 0; i < a.ops().size(); ++i) {
    const Operation& f = a.ops()[i];
    if (f.arity != 2) continue;
    if (f.name == "join" && lo.join < 0) lo.join = static_cast<int>(i);
    if (f.name == "meet" && lo.meet < 0) lo.meet = static_cast<int>(i);
  }
  if (lo.join < 0 || lo.meet < 0)
    throw input_error("not a lattice: '" + a.name() +
                      "' does not designate binary operations 'join' and 'meet'");
  return lo;
}

BinRel lattice_order(const FiniteAlgebra& a) {
  const LatticeOps lo = find_lattice_ops(a);
  const int n = a.size();
  auto join = [&](int x, int y) {
    const int args[2] = {x, y};
    return a.apply_unchecked(lo.join, args, 2);
  };
  auto meet = [&](int x, int y) {
    const int args[2] = {x, y};
    return a.apply_unchecked(lo.meet, args, 2);
  };
  auto fail = [&](const std::string& what) {
    throw input_error("not a lattice: " + what);
  };

  for (int x = 0; x < n; ++x) {
    if (join(x, x) != x)
      fail("join(" + std::to_string(x) + "," + std::to_string(x) + ") != " +
           std::to_string(x) + " (idempotency)");
    if (meet(x, x) != x)
      fail("meet(" + std::to_string(x) + "," + std::to_string(x) + ") != " +
           std::to_string(x) + " (idempotency)");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (join(x, y) != join(y, x))
        fail("join(" + std::to_string(x) + "," + std::to_string(y) +
             ") is not commutative");
      if (meet(x, y) != meet(y, x))
        fail("meet(" + std::to_string(x) + "," + std::to_string(y) +
             ") is not commutative");
      if (join(x, meet(x, y)) != x)
        fail("absorption join(x, meet(x,y)) fails at x=" + std::to_string(x) +
             ", y=" + std::to_string(y));
      if (meet(x, join(x, y)) != x)
        fail("absorption meet(x, join(x,y)) fails at x=" + std::to_string(x) +
             ", y=" + std::to_string(y));
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (join(join(x, y), z) != join(x, join(y, z)))
          fail("join is not associative at (" + std::to_string(x) + "," +
               std::to_string(y) + "," + std::to_string(z) + ")");
        if (meet(meet(x, y), z) != meet(x, meet(y, z)))
          fail("meet is not associative at (" + std::to_string(x) + "," +
               std::to_string(y) + "," + std::to_string(z) + ")");
      }

  BinRel order(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (join(x, y) == y) order.set(x, y);

  if (!order.is_reflexive()) fail("induced order is not reflexive");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && order.at(x, y) && order.at(y, x))
        fail("induced order is not antisymmetric at (" + std::to_string(x) + "," +
             std::to_string(y) + ")");
  if (!order.is_transitive()) fail("induced order is not transitive");

  CompatibilityViolation v;
  if (!is_compatible(a, order, &v))
    fail("induced order is not a compatible relation: " + v.describe(a));
  return order;
}

RepCertificate lattice_witness(const FiniteAlgebra& lattice, const BinRel& theta) {
  require_tolerance(lattice, theta);
  const LatticeOps lo = find_lattice_ops(lattice);
  const BinRel order = lattice_order(lattice);
  auto join = [&](int x, int y) {
    const int args[2] = {x, y};
    return lattice.apply_unchecked(lo.join, args, 2);
  };
  auto meet = [&](int x, int y) {
    const int args[2] = {x, y};
    return lattice.apply_unchecked(lo.meet, args, 2);
  };

  const BinRel witness = order & theta;
  RepCertificate cert = build_certificate(lattice, theta, witness, SearchStats{});

  // First half: every Θ-pair (a,b) lifts through (a, a∨b), (b, a∨b) ∈ B.
  for (auto [x, y] : theta.pairs()) {
    const int top = join(x, y);
    if (!witness.at(x, top) || !witness.at(y, top))
      throw contradiction_error("lattice witness: " + pair_text(x, y) +
                                " does not lift through join " + std::to_string(top));
  }
  // Second half: any (a,b) in the image meets back down to a Θ-pair.
  for (auto [x, y] : cert.image.pairs()) {
    int c = -1;
    for (int z = 0; z < lattice.size(); ++z)
      if (witness.at(x, z) && witness.at(y, z)) {
        c = z;
        break;
      }
    if (c < 0)
      throw contradiction_error("lattice witness: image pair " + pair_text(x, y) +
                                " has no common upper witness");
    if (meet(x, c) != x || meet(c, y) != y || !theta.at(x, y))
      throw contradiction_error("lattice witness: meet argument fails at " +
                                pair_text(x, y) + " via " + std::to_string(c));
  }

  if (compose(witness, witness.converse()) != theta)
    throw contradiction_error("lattice witness composition differs from theta");
  return cert;
}

RepDecision is_representable(const FiniteAlgebra& a, const BinRel& theta,
                             const SearchOptions& opts) {
  require_tolerance(a, theta);
  auto outcome = search_witness(a, theta, opts, [&](const BinRel& r) {
    return compose(r, r.converse()) == theta;
  });
  if (outcome.witness)
    return build_certificate(a, theta, *outcome.witness, outcome.stats);
  return NonRepCertificate{theta, outcome.stats, true};
}

ChainReport verify_equiv_chain(const RepCertificate& cert, bool detailed) {
  const int n = cert.theta.size();
  const BinRel& r = cert.witness;
  const BinRel rc = r.converse();
  ChainReport report;
  std::vector<int> probe(2);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      ++report.pairs_checked;
      const bool c1 = cert.theta.at(x, z);
      bool c2 = false, c3 = false, c4 = false;
      for (int b = 0; b < n && !c2; ++b) c2 = r.at(x, b) && rc.at(b, z);
      for (int b = 0; b < n && !c3; ++b) c3 = r.at(x, b) && r.at(z, b);
      for (int b = 0; b < n && !c4; ++b) {
        probe[0] = x;
        probe[1] = b;
        const int i1 = cert.pair_alg.index_of(probe);
        probe[0] = z;
        const int i2 = cert.pair_alg.index_of(probe);
        c4 = i1 >= 0 && i2 >= 0 && cert.beta.at(i1, i2);
      }
      const bool c5 = cert.image.at(x, z);
      const bool consistent = c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5;
      if (!consistent) ++report.failures;
      if (detailed || !consistent) {
        std::ostringstream os;
        os << "pair " << pair_text(x, z) << ": (1)=" << c1 << " (2)=" << c2
           << " (3)=" << c3 << " (4)=" << c4 << " (5)=" << c5
           << (consistent ? "" : "  <-- chain broken");
        report.log.push_back(os.str());
      }
    }
  return report;
}

ImageTriple rep_to_congruence_image(const RepCertificate& cert) {
  const ChainReport report = verify_equiv_chain(cert);
  if (report.failures > 0)
    throw contradiction_error("equivalence chain failed on " +
                              std::to_string(report.failures) + " pair(s): " +
                              (report.log.empty() ? "" : report.log.front()));
  return ImageTriple{cert.pair_alg, cert.phi, cert.beta};
}

RepCertificate extract_witness_from_image(const FiniteAlgebra& a,
                                          const PairAlgebra& b, const BinRel& theta) {
  if (b.width() != 2)
    throw input_error("B must be a subalgebra of AxA, got width " +
                      std::to_string(b.width()));
  if (!structurally_equal(b.base(), a))
    throw input_error("B is a subalgebra of a power of a different algebra");
  std::vector<int> probe(2);
  for (int x = 0; x < a.size(); ++x) {
    probe[0] = probe[1] = x;
    if (b.index_of(probe) < 0)
      throw input_error("B does not contain the diagonal: missing " +
                        pair_text(x, x));
  }
  Hom phi = projection_hom(b, 0);
  if (!phi.surjective())
    throw input_error("first projection of B is not surjective");
  Hom pi2 = projection_hom(b, 1);
  BinRel beta = kernel(pi2);
  BinRel image = image_of_relation(phi, beta);
  if (image != theta) {
    const auto extra = image.first_difference(theta);
    const auto missing = theta.first_difference(image);
    const auto bad = extra.first >= 0 ? extra : missing;
    throw input_error("image of the kernel differs from theta at " +
                      pair_text(bad.first, bad.second));
  }

  BinRel witness(a.size());
  for (const auto& t : b.carrier()) witness.set(t[0], t[1]);
  if (compose(witness, witness.converse()) != theta)
    throw contradiction_error("extracted witness fails the composition identity");
  return RepCertificate{theta,          witness,          b, std::move(phi),
                        std::move(beta), std::move(image), true, SearchStats{}};
}

bool reverify(const FiniteAlgebra& a, const RepCertificate& cert, std::string* why) {
  auto reject = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (!cert.witness.is_reflexive()) return reject("witness not reflexive");
  if (!is_compatible(a, cert.witness)) return reject("witness not compatible");
  if (!cert.theta.contains(cert.witness)) return reject("witness escapes theta");
  if (compose(cert.witness, cert.witness.converse()) != cert.theta)
    return reject("composition differs from theta");
  if (cert.pair_alg.carrier_size() != cert.witness.count())
    return reject("pair algebra carrier does not match the witness");
  if (cert.image != cert.theta) return reject("stored image differs from theta");
  const ChainReport chain = verify_equiv_chain(cert);
  if (chain.failures > 0) return reject("equivalence chain failed");
  return true;
}

PowerWitness build_power_witness(const FiniteAlgebra& a, const BinRel& theta,
                                 const std::vector<RepCertificate>& family,
                                 const SearchOptions& opts) {
  if (family.empty())
    throw contract_error("power witness requires a nonempty family");
  const int n = a.size();
  const int lambda = static_cast<int>(family.size());

  // carrier size = Σ_a Π_i |R_i[a]| — check it against the budget first
  std::uint64_t carrier_size = 0;
  for (int x = 0; x < n; ++x) {
    std::uint64_t rows = 1;
    for (const RepCertificate& cert : family) {
      int row = 0;
      cert.witness.for_each_in_row(x, [&](int) { ++row; });
      rows *= static_cast<std::uint64_t>(row);
      if (rows > opts.size_budget)
        throw resource_error("power witness carrier exceeds the size budget",
                             rows);
    }
    carrier_size += rows;
    if (carrier_size > opts.size_budget)
      throw resource_error("power witness carrier exceeds the size budget",
                           carrier_size);
  }

  std::vector<std::vector<int>> carrier;
  carrier.reserve(static_cast<std::size_t>(carrier_size));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda));
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < lambda; ++i) {
      rows[static_cast<std::size_t>(i)].clear();
      family[static_cast<std::size_t>(i)].witness.for_each_in_row(
          x, [&](int y) { rows[static_cast<std::size_t>(i)].push_back(y); });
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(lambda), 0);
    for (;;) {
      std::vector<int> tuple(static_cast<std::size_t>(lambda) + 1);
      tuple[0] = x;
      for (int i = 0; i < lambda; ++i)
        tuple[static_cast<std::size_t>(i) + 1] =
            rows[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
      carrier.push_back(std::move(tuple));
      int pos = lambda - 1;
      while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] ==
                             rows[static_cast<std::size_t>(pos)].size()) {
        pick[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

  PowerWitness pw{PairAlgebra(a, lambda + 1, std::move(carrier), opts.size_budget),
                  std::nullopt, std::nullopt, BinRel(n), false};

  // φ(β) by grouping the carrier on its tail; no power is materialized
  std::vector<int> tail_coords;
  for (int c = 1; c <= lambda; ++c) tail_coords.push_back(c);
  {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (const auto& t : pw.pair_alg.carrier())
      groups[std::vector<int>(t.begin() + 1, t.end())].push_back(t[0]);
    for (const auto& [unused, firsts] : groups)
      for (int x : firsts)
        for (int y : firsts) pw.image.set(x, y);
  }

  const std::uint64_t csize = static_cast<std::uint64_t>(pw.pair_alg.carrier_size());
  if (pw.pair_alg.has_algebra() && csize <= 4096) {
    pw.phi = projection_hom(pw.pair_alg, 0);
    pw.beta = coordinate_kernel(pw.pair_alg, tail_coords);
    if (!pw.phi->surjective())
      throw contradiction_error("power witness projection is not surjective");
    const BinRel via_hom = image_of_relation(*pw.phi, *pw.beta);
    if (via_hom != pw.image)
      throw contradiction_error("power witness image mismatch between routes");
    pw.fully_materialized = true;
  }

  if (pw.image != theta)
    throw contradiction_error("power witness image differs from theta");
  return pw;
}

WeakRepDecision is_weakly_representable(const FiniteAlgebra& a, const BinRel& theta,
                                        const SearchOptions& opts) {
  require_tolerance(a, theta);
  EnumOptions eo;
  eo.jobs = opts.jobs;
  const std::vector<BinRel> tolerances = enumerate_tolerances(a, eo);

  std::vector<BinRel> reps;
  std::vector<RepCertificate> certs;
  for (const BinRel& t : tolerances) {
    if (!t.contains(theta)) continue;
    RepDecision d = is_representable(a, t, opts);
    if (const RepCertificate* c = certificate(d)) {
      reps.push_back(t);
      certs.push_back(*c);
    }
  }
  // ∇ is always representable, so the family is nonempty.
  BinRel meet = intersect(reps);
  if (meet != theta) {
    const auto extra = meet.first_difference(theta);
    return WeakRepNegative{theta, reps, std::move(meet), extra};
  }

  // Greedy minimization, largest member first; a representable theta is its
  // own smallest member and therefore survives to a λ = 1 family.
  std::vector<char> keep(certs.size(), 1);
  for (std::size_t step = certs.size(); step-- > 0;) {
    std::vector<BinRel> rest;
    for (std::size_t j = 0; j < certs.size(); ++j)
      if (keep[j] && j != step) rest.push_back(certs[j].theta);
    if (!rest.empty() && intersect(rest) == theta) keep[step] = 0;
  }
  std::vector<RepCertificate> family;
  for (std::size_t j = 0; j < certs.size(); ++j)
    if (keep[j]) family.push_back(std::move(certs[j]));

  WeakRepCertificate cert;
  cert.theta = theta;
  cert.lambda = static_cast<int>(family.size());
  cert.family = std::move(family);
  try {
    cert.power = build_power_witness(a, theta, cert.family, opts);
    cert.verified = cert.power->image == theta;
  } catch (const resource_error&) {
    cert.power.reset();  // flagged: certificate without the power witness
    cert.verified = true;
  }
  return cert;
}

StrongRepResult check_strong_rep(const FiniteAlgebra& a, const BinRel& theta,
                                 const SearchOptions& opts) {
  require_tolerance(a, theta);
  auto outcome = search_witness(a, theta, opts, [&](const BinRel& r) {
    const BinRel rc = r.converse();
    return (compose(r, rc) & compose(rc, r)) == theta;
  });
  StrongRepResult res;
  res.stats = outcome.stats;
  if (outcome.witness)
    res.witness = std::move(*outcome.witness);
  else
    res.exhausted = true;
  return res;
}

bool check_eqm(const FiniteAlgebra& a, const BinRel& theta, const BinRel& r,
               std::string* diagnostic) {
  if (r.size() != a.size() || theta.size() != a.size())
    throw contract_error("relation sizes do not match the algebra");
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool witnessed = false;
      for (int c = 0; c < n && !witnessed; ++c) {
        if (!r.at(x, c) || !r.at(y, c)) continue;
        for (int d = 0; d < n && !witnessed; ++d)
          witnessed = r.at(d, x) && r.at(d, y) && r.at(d, c);
      }
      if (witnessed != theta.at(x, y)) {
        if (diagnostic)
          *diagnostic = "pair " + pair_text(x, y) + ": theta=" +
                        (theta.at(x, y) ? "yes" : "no") + " but witnesses say " +
                        (witnessed ? "yes" : "no");
        return false;
      }
    }
  return true;
}

LatticeEqmReport verify_lattice_eqm(const FiniteAlgebra& lattice, const BinRel& theta) {
  require_tolerance(lattice, theta);
  const LatticeOps lo = find_lattice_ops(lattice);
  const BinRel order = lattice_order(lattice);
  LatticeEqmReport report;
  report.witness = order & theta;
  const BinRel& r = report.witness;
  const BinRel rc = r.converse();
  report.eq_holds = (compose(r, rc) & compose(rc, r)) == theta;
  report.eqm_holds = check_eqm(lattice, theta, r);
  report.join_meet_witness_ok = true;
  for (auto [x, y] : theta.pairs()) {
    const int args1[2] = {x, y};
    const int c = lattice.apply_unchecked(lo.join, args1, 2);
    const int d = lattice.apply_unchecked(lo.meet, args1, 2);
    if (!(r.at(x, c) && r.at(y, c) && r.at(d, x) && r.at(d, y) && r.at(d, c))) {
      report.join_meet_witness_ok = false;
      break;
    }
  }
  return report;
}

namespace {

LattgenReport lattgen_pipeline(const FiniteAlgebra& a, const BinRel& m,
                               const SearchOptions& opts) {
  LattgenReport report;
  EnumOptions eo;
  eo.jobs = opts.jobs;
  const std::vector<BinRel> tolerances = enumerate_tolerances(a, eo);
  report.pipeline_ok = true;
  for (const BinRel& theta : tolerances) {
    ++report.tolerances_checked;
    const BinRel witness = m & theta;
    if (compose(witness, witness.converse()) != theta) {
      report.pipeline_ok = false;
      break;
    }
    RepCertificate cert = build_certificate(a, theta, witness, SearchStats{});
    if (!cert.verified) {
      report.pipeline_ok = false;
      break;
    }
  }
  return report;
}

}  // namespace

LattgenReport lattgen_check(const FiniteAlgebra& a, int join_index, int meet_index,
                            const BinRel& m, const SearchOptions& opts) {
  if (a.op(join_index).arity != 2 || a.op(meet_index).arity != 2)
    throw input_error("the designated operations must both be binary");
  if (m.size() != a.size())
    throw input_error("M does not live on the algebra's universe");
  auto join = [&](int x, int y) {
    const int args[2] = {x, y};
    return a.apply_unchecked(join_index, args, 2);
  };
  auto meet = [&](int x, int y) {
    const int args[2] = {x, y};
    return a.apply_unchecked(meet_index, args, 2);
  };
  LattgenReport report;

  CompatibilityViolation cv;
  if (!is_compatible(a, m, &cv)) {
    report.violation = ConditionViolation{
        "compatibility", {cv.image.first, cv.image.second}, cv.describe(a)};
    return report;
  }
  for (int x = 0; x < a.size(); ++x)
    if (join(x, x) != x) {
      report.violation = ConditionViolation{
          "(1)", {x}, "join(" + std::to_string(x) + "," + std::to_string(x) +
                          ") = " + std::to_string(join(x, x))};
      return report;
    }
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      const int j = join(x, y);
      if (!m.at(x, j)) {
        report.violation = ConditionViolation{
            "(2)", {x, y}, std::to_string(x) + " M " + std::to_string(j) + " required"};
        return report;
      }
      if (!m.at(y, j)) {
        report.violation = ConditionViolation{
            "(2)", {x, y}, std::to_string(y) + " M " + std::to_string(j) + " required"};
        return report;
      }
    }
  for (int x = 0; x < a.size(); ++x)
    for (int c = 0; c < a.size(); ++c) {
      if (!m.at(x, c)) continue;
      if (meet(x, c) != x || meet(c, x) != x) {
        report.violation = ConditionViolation{
            "(3)", {x, c}, "meet(" + std::to_string(x) + "," + std::to_string(c) +
                               ") = " + std::to_string(meet(x, c)) + ", meet(" +
                               std::to_string(c) + "," + std::to_string(x) +
                               ") = " + std::to_string(meet(c, x))};
        return report;
      }
    }

  report = lattgen_pipeline(a, m, opts);
  return report;
}

LattgenReport lattgen2_check(const FiniteAlgebra& a, const SearchOptions& opts) {
  if (a.ops().size() != 2 || a.ops()[0].arity != 2 || a.ops()[1].arity != 2)
    throw input_error("'" + a.name() +
                      "' must have exactly two binary operations");
  auto join = [&](int x, int y) {
    const int args[2] = {x, y};
    return a.apply_unchecked(0, args, 2);
  };
  auto meet = [&](int x, int y) {
    const int args[2] = {x, y};
    return a.apply_unchecked(1, args, 2);
  };
  LattgenReport report;
  const int n = a.size();

  // (0): M of a M b ⇔ a∨b = b is compatible with both operations
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (join(x, y) != y) continue;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (join(u, v) != v) continue;
          if (join(join(x, u), join(y, v)) != join(y, v)) {
            report.violation = ConditionViolation{
                "(0)", {x, u, y, v}, "join images leave M"};
            return report;
          }
          if (join(meet(x, u), meet(y, v)) != meet(y, v)) {
            report.violation = ConditionViolation{
                "(0)", {x, u, y, v}, "meet images leave M"};
            return report;
          }
        }
    }
  for (int x = 0; x < n; ++x)
    if (join(x, x) != x) {
      report.violation = ConditionViolation{
          "(1)", {x}, "join(" + std::to_string(x) + "," + std::to_string(x) +
                          ") = " + std::to_string(join(x, x))};
      return report;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int j = join(x, y);
      if (join(x, j) != j || join(y, j) != j) {
        report.violation =
            ConditionViolation{"(2)", {x, y}, "join is not closed over itself"};
        return report;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < n; ++c) {
      if (join(x, c) != c) continue;
      if (meet(x, c) != x || meet(c, x) != x) {
        report.violation = ConditionViolation{
            "(3)", {x, c}, "meet does not restore " + std::to_string(x)};
        return report;
      }
    }

  BinRel m(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (join(x, y) == y) m.set(x, y);
  if (!is_compatible(a, m))
    throw contradiction_error("condition (0) passed but the derived M is incompatible");

  report = lattgen_pipeline(a, m, opts);
  return report;
}

}  // namespace tolrep
