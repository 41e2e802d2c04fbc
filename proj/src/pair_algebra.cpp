#include "tolrep/pair_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tolrep/relations.hpp"
#include "tolrep/tuple_iter.hpp"

namespace tolrep {

namespace {

std::string tuple_text(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

}  // namespace

PairAlgebra::PairAlgebra(FiniteAlgebra base, int width,
                         std::vector<std::vector<int>> carrier,
                         std::uint64_t table_budget)
    : base_(std::move(base)), width_(width), carrier_(std::move(carrier)) {
  if (width_ < 1) throw input_error("tuple width must be positive");
  if (carrier_.empty()) throw input_error("carrier must be nonempty");
  for (const auto& t : carrier_) {
    if (static_cast<int>(t.size()) != width_)
      throw input_error("carrier tuple " + tuple_text(t) + " has width " +
                        std::to_string(t.size()) + ", expected " +
                        std::to_string(width_));
    for (int v : t)
      if (v < 0 || v >= base_.size())
        throw input_error("carrier tuple " + tuple_text(t) +
                          " leaves the base universe");
  }
  std::sort(carrier_.begin(), carrier_.end());
  carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());

  // Decide up front whether the index tables fit.
  std::uint64_t entries = 0;
  bool fits = true;
  for (const Operation& f : base_.ops()) {
    std::uint64_t t = 1;
    for (int i = 0; i < f.arity && fits; ++i) {
      t *= carrier_.size();
      if (t > table_budget) fits = false;
    }
    entries += t;
    if (entries > table_budget) fits = false;
  }

  const std::size_t m = carrier_.size();
  std::vector<Operation> ops;
  std::vector<int> image(static_cast<std::size_t>(width_), 0);
  std::vector<int> coord_args(static_cast<std::size_t>(16), 0);
  for (std::size_t i = 0; i < base_.ops().size(); ++i) {
    const Operation& f = base_.ops()[i];
    const int k = f.arity;
    Operation g{f.name, k, {}};
    if (fits) {
      std::uint64_t tsize = 1;
      for (int j = 0; j < k; ++j) tsize *= m;
      g.table.resize(static_cast<std::size_t>(tsize));
    }
    coord_args.assign(static_cast<std::size_t>(std::max(k, 1)), 0);
    std::size_t pos = 0;
    for_each_tuple(m, k, [&](const std::vector<std::size_t>& t) {
      for (int c = 0; c < width_; ++c) {
        for (int j = 0; j < k; ++j)
          coord_args[static_cast<std::size_t>(j)] =
              carrier_[t[static_cast<std::size_t>(j)]][static_cast<std::size_t>(c)];
        image[static_cast<std::size_t>(c)] =
            base_.apply_unchecked(static_cast<int>(i), coord_args.data(), k);
      }
      const int idx = index_of(image);
      if (idx < 0) {
        std::ostringstream os;
        os << "carrier is not closed under operation '" << f.name << "' at rows";
        for (int j = 0; j < k; ++j)
          os << " " << tuple_text(carrier_[t[static_cast<std::size_t>(j)]]);
        os << " -> " << tuple_text(image);
        throw contract_error(os.str());
      }
      if (fits) g.table[pos++] = idx;
    });
    if (fits) ops.push_back(std::move(g));
  }
  if (fits)
    algebra_.emplace(base_.name() + "#carrier" + std::to_string(m),
                     static_cast<int>(m), std::move(ops));
}

int PairAlgebra::index_of(std::span<const int> tuple) const {
  const auto it = std::lower_bound(
      carrier_.begin(), carrier_.end(), tuple,
      [](const std::vector<int>& a, std::span<const int> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
  if (it == carrier_.end() || it->size() != tuple.size() ||
      !std::equal(it->begin(), it->end(), tuple.begin()))
    return -1;
  return static_cast<int>(it - carrier_.begin());
}

const FiniteAlgebra& PairAlgebra::algebra() const {
  if (!algebra_)
    throw resource_error("carrier algebra tables were over the size budget",
                         carrier_.size());
  return *algebra_;
}

PairAlgebra subalgebra_on_pairs(const FiniteAlgebra& a, const BinRel& r) {
  if (r.size() != a.size())
    throw contract_error("relation does not live on the algebra's universe");
  CompatibilityViolation v;
  if (!is_compatible(a, r, &v))
    throw contract_error("relation is not compatible: " + v.describe(a));
  std::vector<std::vector<int>> carrier;
  carrier.reserve(static_cast<std::size_t>(r.count()));
  for (auto [x, y] : r.pairs()) carrier.push_back({x, y});
  return PairAlgebra(a, 2, std::move(carrier));
}

Hom projection_hom(const PairAlgebra& p, int coord) {
  if (coord < 0 || coord >= p.width())
    throw input_error("projection coordinate " + std::to_string(coord) +
                      " out of range for width " + std::to_string(p.width()));
  std::vector<int> map(static_cast<std::size_t>(p.carrier_size()));
  for (int i = 0; i < p.carrier_size(); ++i)
    map[static_cast<std::size_t>(i)] =
        p.carrier()[static_cast<std::size_t>(i)][static_cast<std::size_t>(coord)];
  return Hom(p.algebra(), p.base(), std::move(map));
}

BinRel coordinate_kernel(const PairAlgebra& p, const std::vector<int>& coords) {
  for (int c : coords)
    if (c < 0 || c >= p.width())
      throw input_error("kernel coordinate " + std::to_string(c) + " out of range");
  std::map<std::vector<int>, std::vector<int>> groups;
  std::vector<int> key(coords.size());
  for (int i = 0; i < p.carrier_size(); ++i) {
    for (std::size_t j = 0; j < coords.size(); ++j)
      key[j] = p.carrier()[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(coords[j])];
    groups[key].push_back(i);
  }
  BinRel ker(p.carrier_size());
  for (const auto& [unused, members] : groups)
    for (int i : members)
      for (int j : members) ker.set(i, j);
  return ker;
}

}  // namespace tolrep
