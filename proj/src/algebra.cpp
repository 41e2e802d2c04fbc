#include "tolrep/algebra.hpp"

#include <algorithm>

#include "tolrep/tuple_iter.hpp"

namespace tolrep {

namespace {

std::uint64_t table_size_for(int n, int arity) {
  std::uint64_t size = 1;
  for (int i = 0; i < arity; ++i) {
    size *= static_cast<std::uint64_t>(n);
    if (size > (1ull << 40))
      throw resource_error("operation table of arity " + std::to_string(arity) +
                               " over " + std::to_string(n) +
                               " elements is too large",
                           size);
  }
  return size;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, int n, std::vector<Operation> ops)
    : name_(std::move(name)), n_(n), ops_(std::move(ops)) {
  if (n_ < 1)
    throw input_error("algebra '" + name_ + "': the universe must be nonempty");
  for (const Operation& op : ops_) {
    if (op.arity < 0)
      throw input_error("algebra '" + name_ + "': operation '" + op.name +
                        "' has negative arity");
    const std::uint64_t expect = table_size_for(n_, op.arity);
    if (op.table.size() != expect)
      throw input_error("algebra '" + name_ + "': operation '" + op.name +
                        "' has " + std::to_string(op.table.size()) +
                        " table entries, expected " + std::to_string(expect));
    for (int v : op.table)
      if (v < 0 || v >= n_)
        throw input_error("algebra '" + name_ + "': operation '" + op.name +
                          "' has table entry " + std::to_string(v) +
                          " outside {0.." + std::to_string(n_ - 1) + "}");
  }
}

const Operation& FiniteAlgebra::op(int index) const {
  if (index < 0 || index >= static_cast<int>(ops_.size()))
    throw input_error("algebra '" + name_ + "': no operation with index " +
                      std::to_string(index));
  return ops_[static_cast<std::size_t>(index)];
}

int FiniteAlgebra::apply(int op_index, std::span<const int> args) const {
  const Operation& f = op(op_index);
  if (static_cast<int>(args.size()) != f.arity)
    throw input_error("operation '" + f.name + "' expects " +
                      std::to_string(f.arity) + " arguments, got " +
                      std::to_string(args.size()));
  std::size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= n_)
      throw input_error("operation '" + f.name + "': argument " +
                        std::to_string(a) + " outside the universe");
    idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a);
  }
  return f.table[idx];
}

bool FiniteAlgebra::similar_to(const FiniteAlgebra& other) const {
  if (ops_.size() != other.ops_.size()) return false;
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].arity != other.ops_[i].arity) return false;
  return true;
}

bool structurally_equal(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size() || a.ops().size() != b.ops().size()) return false;
  for (std::size_t i = 0; i < a.ops().size(); ++i) {
    if (a.ops()[i].arity != b.ops()[i].arity) return false;
    if (a.ops()[i].table != b.ops()[i].table) return false;
  }
  return true;
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!a.similar_to(b))
    throw input_error("product requires similar algebras ('" + a.name() +
                      "' and '" + b.name() + "' differ in type)");
  const int na = a.size(), nb = b.size();
  const int n = na * nb;
  std::vector<Operation> ops;
  ops.reserve(a.ops().size());
  std::vector<int> as, bs;
  for (std::size_t i = 0; i < a.ops().size(); ++i) {
    const Operation& f = a.ops()[i];
    const int k = f.arity;
    Operation g{f.name, k, {}};
    g.table.resize(static_cast<std::size_t>(table_size_for(n, k)));
    as.assign(static_cast<std::size_t>(k), 0);
    bs.assign(static_cast<std::size_t>(k), 0);
    std::size_t pos = 0;
    for_each_tuple(static_cast<std::size_t>(n), k,
                   [&](const std::vector<std::size_t>& t) {
                     for (int j = 0; j < k; ++j) {
                       as[static_cast<std::size_t>(j)] = static_cast<int>(t[j]) / nb;
                       bs[static_cast<std::size_t>(j)] = static_cast<int>(t[j]) % nb;
                     }
                     const int fa = a.apply_unchecked(static_cast<int>(i), as.data(), k);
                     const int fb = b.apply_unchecked(static_cast<int>(i), bs.data(), k);
                     g.table[pos++] = fa * nb + fb;
                   });
    ops.push_back(std::move(g));
  }
  return FiniteAlgebra(a.name() + "x" + b.name(), n, std::move(ops));
}

FiniteAlgebra power(const FiniteAlgebra& a, int k, std::uint64_t size_budget) {
  if (k < 0) throw input_error("power exponent must be nonnegative");
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<std::uint64_t>(a.size());
    if (size > size_budget)
      throw resource_error("power " + a.name() + "^" + std::to_string(k) +
                               " has " + std::to_string(size) +
                               "+ elements, over the budget of " +
                               std::to_string(size_budget),
                           size);
  }
  for (const Operation& f : a.ops()) {
    std::uint64_t entries = 1;
    for (int i = 0; i < f.arity; ++i) {
      entries *= size;
      if (entries > size_budget)
        throw resource_error("power table for '" + f.name + "' needs " +
                                 std::to_string(entries) + "+ entries",
                             entries);
    }
  }
  std::vector<Operation> unit_ops;
  for (const Operation& f : a.ops())
    unit_ops.push_back(Operation{f.name, f.arity,
                                 std::vector<int>(table_size_for(1, f.arity), 0)});
  FiniteAlgebra acc("1", 1, std::move(unit_ops));
  for (int i = 0; i < k; ++i) acc = product(acc, a);
  return FiniteAlgebra(a.name() + "^" + std::to_string(k), acc.size(), acc.ops());
}

std::vector<int> subuniverse_closure(const FiniteAlgebra& a,
                                     const std::vector<int>& seed) {
  std::vector<char> in(static_cast<std::size_t>(a.size()), 0);
  std::vector<int> members;
  for (int s : seed) {
    if (s < 0 || s >= a.size())
      throw input_error("subuniverse seed element " + std::to_string(s) +
                        " outside the universe");
    if (!in[static_cast<std::size_t>(s)]) {
      in[static_cast<std::size_t>(s)] = 1;
      members.push_back(s);
    }
  }
  std::vector<int> args;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < a.ops().size(); ++i) {
      const int k = a.ops()[i].arity;
      const std::size_t snapshot = members.size();
      if (k > 0 && snapshot == 0) continue;
      args.assign(static_cast<std::size_t>(k), 0);
      for_each_tuple(snapshot, k, [&](const std::vector<std::size_t>& t) {
        for (int j = 0; j < k; ++j)
          args[static_cast<std::size_t>(j)] = members[t[static_cast<std::size_t>(j)]];
        const int v = a.apply_unchecked(static_cast<int>(i), args.data(), k);
        if (!in[static_cast<std::size_t>(v)]) {
          in[static_cast<std::size_t>(v)] = 1;
          members.push_back(v);
          changed = true;
        }
      });
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteAlgebra subalgebra(const FiniteAlgebra& a, const std::vector<int>& universe) {
  if (universe.empty())
    throw input_error("subalgebra requires a nonempty universe");
  std::vector<int> pos(static_cast<std::size_t>(a.size()), -1);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const int e = universe[i];
    if (e < 0 || e >= a.size())
      throw input_error("subalgebra element " + std::to_string(e) +
                        " outside the universe");
    if (i > 0 && universe[i - 1] >= e)
      throw input_error("subalgebra universe must be sorted and distinct");
    pos[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  const int m = static_cast<int>(universe.size());
  std::vector<Operation> ops;
  std::vector<int> args;
  for (std::size_t i = 0; i < a.ops().size(); ++i) {
    const Operation& f = a.ops()[i];
    const int k = f.arity;
    Operation g{f.name, k, {}};
    g.table.resize(static_cast<std::size_t>(table_size_for(m, k)));
    args.assign(static_cast<std::size_t>(k), 0);
    std::size_t out_pos = 0;
    for_each_tuple(static_cast<std::size_t>(m), k,
                   [&](const std::vector<std::size_t>& t) {
                     for (int j = 0; j < k; ++j)
                       args[static_cast<std::size_t>(j)] =
                           universe[t[static_cast<std::size_t>(j)]];
                     const int v = a.apply_unchecked(static_cast<int>(i), args.data(), k);
                     if (pos[static_cast<std::size_t>(v)] < 0)
                       throw contract_error(
                           "set is not closed under operation '" + f.name +
                           "' (image " + std::to_string(v) + " escapes)");
                     g.table[out_pos++] = pos[static_cast<std::size_t>(v)];
                   });
    ops.push_back(std::move(g));
  }
  return FiniteAlgebra(a.name() + "|sub" + std::to_string(m), m, std::move(ops));
}

std::uint64_t encode_tuple(std::span<const int> tuple, int base) {
  std::uint64_t code = 0;
  for (int v : tuple) code = code * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(v);
  return code;
}

std::vector<int> decode_tuple(std::uint64_t code, int base, int width) {
  std::vector<int> tuple(static_cast<std::size_t>(width), 0);
  for (int i = width - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(base));
    code /= static_cast<std::uint64_t>(base);
  }
  return tuple;
}

}  // namespace tolrep
