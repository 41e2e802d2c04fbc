#include "tolrep/naive.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>

#include "tolrep/parallel.hpp"

namespace tolrep::naive {

namespace {

std::vector<std::pair<int, int>> relation_pairs(const BinRel& r) {
  std::vector<std::pair<int, int>> ps;
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b)
      if (r.at(a, b)) ps.emplace_back(a, b);
  return ps;
}

bool compatible_pairs(const FiniteAlgebra& alg,
                      const std::vector<std::pair<int, int>>& ps,
                      const BinRel& r) {
  std::vector<int> xs, ys;
  for (std::size_t op = 0; op < alg.ops().size(); ++op) {
    const int k = alg.ops()[op].arity;
    if (k == 0) {
      const int c = alg.ops()[op].table[0];
      if (!r.at(c, c)) return false;
      continue;
    }
    xs.assign(static_cast<std::size_t>(k), 0);
    ys.assign(static_cast<std::size_t>(k), 0);
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    if (ps.empty()) continue;
    for (;;) {
      for (int j = 0; j < k; ++j) {
        xs[static_cast<std::size_t>(j)] = ps[idx[static_cast<std::size_t>(j)]].first;
        ys[static_cast<std::size_t>(j)] = ps[idx[static_cast<std::size_t>(j)]].second;
      }
      if (!r.at(alg.apply_unchecked(static_cast<int>(op), xs.data(), k),
                alg.apply_unchecked(static_cast<int>(op), ys.data(), k)))
        return false;
      int pos = k - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == ps.size()) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return true;
}

}  // namespace

bool compatible(const FiniteAlgebra& a, const BinRel& r) {
  return compatible_pairs(a, relation_pairs(r), r);
}

bool tolerance(const FiniteAlgebra& a, const BinRel& r) {
  return r.is_reflexive() && r.is_symmetric() && compatible(a, r);
}

bool congruence(const FiniteAlgebra& a, const BinRel& r) {
  return tolerance(a, r) && r.is_transitive();
}

BinRel compose_direct(const BinRel& r, const BinRel& s) {
  const int n = r.size();
  BinRel out(n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int b = 0; b < n; ++b)
        if (r.at(a, b) && s.at(b, c)) {
          out.set(a, c);
          break;
        }
  return out;
}

namespace {

std::vector<BinRel> all_filtered(const FiniteAlgebra& a,
                                 bool (*keep)(const FiniteAlgebra&, const BinRel&)) {
  const int n = a.size();
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) slots.emplace_back(x, y);
  if (slots.size() > 30)
    throw resource_error("naive scan over 2^" + std::to_string(slots.size()) +
                             " symmetric candidates is infeasible",
                         1ull << slots.size());
  std::vector<BinRel> out;
  const std::uint64_t total = 1ull << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BinRel r = BinRel::diagonal(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) {
        r.set(slots[i].first, slots[i].second);
        r.set(slots[i].second, slots[i].first);
      }
    if (keep(a, r)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::vector<BinRel> all_tolerances(const FiniteAlgebra& a) {
  return all_filtered(a, [](const FiniteAlgebra& alg, const BinRel& r) {
    return compatible(alg, r);
  });
}

std::vector<BinRel> all_congruences(const FiniteAlgebra& a) {
  return all_filtered(a, [](const FiniteAlgebra& alg, const BinRel& r) {
    return compatible(alg, r) && r.is_transitive();
  });
}

namespace {

// Candidate subsets are bitmasks over the off-diagonal positions of theta.
// For algebras whose operations have arity ≤ 2 the compatibility test
// reduces to precomputed requirement masks per position (and per position
// pair); higher arities fall back to the direct loop.
struct FastScan {
  int n = 0;
  int m = 0;                                   // number of candidate positions
  std::vector<std::pair<int, int>> slot;       // position -> ordered pair
  std::vector<std::uint32_t> theta_row;        // theta as row bitmasks
  std::vector<std::uint32_t> req1;             // per position
  std::vector<char> forbid1;
  std::vector<std::uint32_t> req2;             // per position pair, m*m
  std::vector<char> forbid2;
  std::vector<std::uint32_t> base_row;         // Δ rows
  std::vector<int> slot_index;                 // n*n -> position or -1
};

bool build_fast_scan(const FiniteAlgebra& a, const BinRel& theta, FastScan& fs) {
  for (const Operation& f : a.ops())
    if (f.arity > 2) return false;
  const int n = a.size();
  if (n > 25) return false;
  fs.n = n;
  fs.slot_index.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && theta.at(x, y)) {
        fs.slot_index[static_cast<std::size_t>(x) * n + y] =
            static_cast<int>(fs.slot.size());
        fs.slot.emplace_back(x, y);
      }
  fs.m = static_cast<int>(fs.slot.size());
  if (fs.m > 25) return false;

  fs.theta_row.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (theta.at(x, y)) fs.theta_row[static_cast<std::size_t>(x)] |= 1u << y;

  fs.req1.assign(static_cast<std::size_t>(fs.m), 0);
  fs.forbid1.assign(static_cast<std::size_t>(fs.m), 0);
  fs.req2.assign(static_cast<std::size_t>(fs.m) * fs.m, 0);
  fs.forbid2.assign(static_cast<std::size_t>(fs.m) * fs.m, 0);

  auto add_requirement = [&](std::uint32_t& req, char& forbid, int ix, int iy) {
    if (ix == iy) return;  // diagonal image is always present
    const int p = fs.slot_index[static_cast<std::size_t>(ix) * n + iy];
    if (p < 0)
      forbid = 1;  // image escapes Δ ∪ offdiag(theta): candidate can't contain this
    else
      req |= 1u << p;
  };

  int args2[2];
  for (std::size_t op = 0; op < a.ops().size(); ++op) {
    const int k = a.ops()[op].arity;
    if (k == 0) continue;  // (c,c) ∈ Δ always
    if (k == 1) {
      for (int p = 0; p < fs.m; ++p) {
        const auto [x, y] = fs.slot[static_cast<std::size_t>(p)];
        const int fx = a.apply_unchecked(static_cast<int>(op), &x, 1);
        const int fy = a.apply_unchecked(static_cast<int>(op), &y, 1);
        add_requirement(fs.req1[static_cast<std::size_t>(p)],
                        fs.forbid1[static_cast<std::size_t>(p)], fx, fy);
      }
      continue;
    }
    // binary: position paired with every diagonal element folds into req1
    for (int p = 0; p < fs.m; ++p) {
      const auto [x, y] = fs.slot[static_cast<std::size_t>(p)];
      for (int d = 0; d < n; ++d) {
        args2[0] = x; args2[1] = d;
        const int fx1 = a.apply_unchecked(static_cast<int>(op), args2, 2);
        args2[0] = y; args2[1] = d;
        const int fy1 = a.apply_unchecked(static_cast<int>(op), args2, 2);
        add_requirement(fs.req1[static_cast<std::size_t>(p)],
                        fs.forbid1[static_cast<std::size_t>(p)], fx1, fy1);
        args2[0] = d; args2[1] = x;
        const int fx2 = a.apply_unchecked(static_cast<int>(op), args2, 2);
        args2[0] = d; args2[1] = y;
        const int fy2 = a.apply_unchecked(static_cast<int>(op), args2, 2);
        add_requirement(fs.req1[static_cast<std::size_t>(p)],
                        fs.forbid1[static_cast<std::size_t>(p)], fx2, fy2);
      }
      for (int q = 0; q < fs.m; ++q) {
        const auto [u, v] = fs.slot[static_cast<std::size_t>(q)];
        args2[0] = x; args2[1] = u;
        const int fx = a.apply_unchecked(static_cast<int>(op), args2, 2);
        args2[0] = y; args2[1] = v;
        const int fy = a.apply_unchecked(static_cast<int>(op), args2, 2);
        add_requirement(fs.req2[static_cast<std::size_t>(p) * fs.m + q],
                        fs.forbid2[static_cast<std::size_t>(p) * fs.m + q], fx, fy);
      }
    }
  }

  fs.base_row.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) fs.base_row[static_cast<std::size_t>(x)] = 1u << x;
  return true;
}

bool fast_candidate_ok(const FastScan& fs, std::uint32_t mask) {
  // compatibility via requirement masks
  for (std::uint32_t rest = mask; rest;) {
    const int p = std::countr_zero(rest);
    rest &= rest - 1;
    if (fs.forbid1[static_cast<std::size_t>(p)]) return false;
    if ((fs.req1[static_cast<std::size_t>(p)] & ~mask) != 0) return false;
    for (std::uint32_t rest2 = mask; rest2;) {
      const int q = std::countr_zero(rest2);
      rest2 &= rest2 - 1;
      const std::size_t at = static_cast<std::size_t>(p) * fs.m + q;
      if (fs.forbid2[at]) return false;
      if ((fs.req2[at] & ~mask) != 0) return false;
    }
  }
  // R∘R⌣ = Θ with row bitmasks
  std::uint32_t rows[32];
  for (int x = 0; x < fs.n; ++x) rows[x] = fs.base_row[static_cast<std::size_t>(x)];
  for (std::uint32_t rest = mask; rest;) {
    const int p = std::countr_zero(rest);
    rest &= rest - 1;
    rows[fs.slot[static_cast<std::size_t>(p)].first] |=
        1u << fs.slot[static_cast<std::size_t>(p)].second;
  }
  for (int x = 0; x < fs.n; ++x) {
    std::uint32_t related = 0;
    for (int z = 0; z < fs.n; ++z)
      if (rows[x] & rows[z]) related |= 1u << z;
    if (related != fs.theta_row[static_cast<std::size_t>(x)]) return false;
  }
  return true;
}

bool slow_candidate_ok(const FiniteAlgebra& a, const BinRel& theta,
                       const std::vector<std::pair<int, int>>& slots,
                       std::uint64_t mask) {
  BinRel r = BinRel::diagonal(a.size());
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (mask >> i & 1) r.set(slots[i].first, slots[i].second);
  if (!compatible(a, r)) return false;
  return compose_direct(r, r.converse()) == theta;
}

}  // namespace

bool representable(const FiniteAlgebra& a, const BinRel& theta, int jobs) {
  FastScan fs;
  const bool fast = build_fast_scan(a, theta, fs);

  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (x != y && theta.at(x, y)) slots.emplace_back(x, y);
  if (slots.size() > 25)
    throw resource_error("naive representability scan over 2^" +
                             std::to_string(slots.size()) +
                             " candidates is infeasible",
                         1ull << slots.size());

  const std::uint64_t total = 1ull << slots.size();
  std::atomic<bool> found{false};
  const std::uint64_t chunk = 1u << 14;
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  parallel_for(static_cast<std::size_t>(chunks), jobs, [&](std::size_t c) {
    if (found.load()) return;
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const bool ok = fast ? fast_candidate_ok(fs, static_cast<std::uint32_t>(mask))
                           : slow_candidate_ok(a, theta, slots, mask);
      if (ok) {
        found.store(true);
        return;
      }
    }
  });
  return found.load();
}

}  // namespace tolrep::naive
