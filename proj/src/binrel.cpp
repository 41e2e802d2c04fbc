#include "tolrep/binrel.hpp"

#include <bit>

#include "tolrep/errors.hpp"

namespace tolrep {

namespace {
void require_same_universe(const BinRel& a, const BinRel& b) {
  if (a.size() != b.size())
    throw contract_error("relation universe mismatch: " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}
}  // namespace

BinRel::BinRel(int n)
    : n_(n),
      words_per_row_(n > 0 ? (n + 63) / 64 : 0),
      words_(static_cast<std::size_t>(n_) * words_per_row_, 0) {
  if (n < 0) throw contract_error("negative universe size");
}

BinRel BinRel::diagonal(int n) {
  BinRel r(n);
  for (int a = 0; a < n; ++a) r.set(a, a);
  return r;
}

BinRel BinRel::full(int n) {
  BinRel r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.set(a, b);
  return r;
}

BinRel BinRel::from_pairs(int n, const std::vector<std::pair<int, int>>& ps) {
  BinRel r(n);
  for (auto [a, b] : ps) r.set(a, b);
  return r;
}

void BinRel::set(int a, int b, bool value) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw contract_error("relation pair (" + std::to_string(a) + "," +
                         std::to_string(b) + ") out of range for n=" +
                         std::to_string(n_));
  std::uint64_t& w = words_[static_cast<std::size_t>(a) * words_per_row_ + (b >> 6)];
  const std::uint64_t bit = 1ull << (b & 63);
  if (value)
    w |= bit;
  else
    w &= ~bit;
}

int BinRel::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int a = 0; a < n_; ++a)
    for_each_in_row(a, [&](int b) { out.emplace_back(a, b); });
  return out;
}

bool BinRel::operator==(const BinRel& other) const {
  return n_ == other.n_ && words_ == other.words_;
}

bool BinRel::contains(const BinRel& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((other.words_[i] & ~words_[i]) != 0) return false;
  return true;
}

BinRel& BinRel::operator|=(const BinRel& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BinRel& BinRel::operator&=(const BinRel& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BinRel BinRel::converse() const {
  BinRel out(n_);
  for (int a = 0; a < n_; ++a)
    for_each_in_row(a, [&](int b) { out.set(b, a); });
  return out;
}

bool BinRel::is_reflexive() const {
  for (int a = 0; a < n_; ++a)
    if (!at(a, a)) return false;
  return true;
}

bool BinRel::is_symmetric() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (at(a, b) != at(b, a)) return false;
  return true;
}

bool BinRel::is_transitive() const {
  return contains(compose(*this, *this));
}

std::pair<int, int> BinRel::first_difference(const BinRel& other) const {
  require_same_universe(*this, other);
  for (int a = 0; a < n_; ++a) {
    const std::uint64_t* ra = row(a);
    const std::uint64_t* rb = other.row(a);
    for (int w = 0; w < words_per_row_; ++w) {
      std::uint64_t diff = ra[w] & ~rb[w];
      if (diff) return {a, (w << 6) + std::countr_zero(diff)};
    }
  }
  return {-1, -1};
}

BinRel compose(const BinRel& r, const BinRel& s) {
  require_same_universe(r, s);
  const int n = r.size();
  BinRel out(n);
  const int wpr = out.words_per_row();
  for (int a = 0; a < n; ++a) {
    std::uint64_t* dst = out.row(a);
    r.for_each_in_row(a, [&](int b) {
      const std::uint64_t* src = s.row(b);
      for (int w = 0; w < wpr; ++w) dst[w] |= src[w];
    });
  }
  return out;
}

BinRel intersect(const std::vector<BinRel>& rels) {
  if (rels.empty())
    throw contract_error("intersection over an empty family is forbidden");
  BinRel out = rels.front();
  for (std::size_t i = 1; i < rels.size(); ++i) out &= rels[i];
  return out;
}

BinRel symmetric_closure(BinRel r) {
  return r | r.converse();
}

BinRel transitive_closure(BinRel r) {
  for (;;) {
    BinRel step = compose(r, r);
    if (r.contains(step)) return r;
    r |= step;
  }
}

bool canonical_less(const BinRel& a, const BinRel& b) {
  require_same_universe(a, b);
  const int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  for (int x = 0; x < a.size(); ++x) {
    const std::uint64_t* ra = a.row(x);
    const std::uint64_t* rb = b.row(x);
    for (int w = 0; w < a.words_per_row(); ++w) {
      if (ra[w] != rb[w]) {
        const std::uint64_t low = (ra[w] ^ rb[w]) & ~((ra[w] ^ rb[w]) - 1);
        return (ra[w] & low) != 0;
      }
    }
  }
  return false;
}

}  // namespace tolrep
