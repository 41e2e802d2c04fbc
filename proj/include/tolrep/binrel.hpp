#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace tolrep {

/// Binary relation on {0..n-1} as a dense bit matrix, one row of 64-bit words
/// per element. Everything downstream (composition, containment, closures)
/// runs word-parallel on rows.
class BinRel {
 public:
  BinRel() = default;
  explicit BinRel(int n);

  static BinRel diagonal(int n);
  static BinRel full(int n);
  static BinRel from_pairs(int n, const std::vector<std::pair<int, int>>& ps);

  int size() const { return n_; }

  bool at(int a, int b) const {
    return (words_[static_cast<std::size_t>(a) * words_per_row_ + (b >> 6)] >>
            (b & 63)) & 1u;
  }
  void set(int a, int b, bool value = true);

  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::pair<int, int>> pairs() const;  // row-major order

  bool operator==(const BinRel& other) const;
  bool operator!=(const BinRel& other) const { return !(*this == other); }
  bool contains(const BinRel& other) const;  // superset or equal

  BinRel& operator|=(const BinRel& other);
  BinRel& operator&=(const BinRel& other);
  friend BinRel operator|(BinRel a, const BinRel& b) { a |= b; return a; }
  friend BinRel operator&(BinRel a, const BinRel& b) { a &= b; return a; }

  BinRel converse() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;  // R∘R ⊆ R

  /// First pair present here and absent in `other`, row-major; {-1,-1} if none.
  std::pair<int, int> first_difference(const BinRel& other) const;

  template <typename Fn>
  void for_each_in_row(int a, Fn&& fn) const {
    const std::uint64_t* r = row(a);
    for (int w = 0; w < words_per_row_; ++w) {
      std::uint64_t word = r[w];
      while (word) {
        fn((w << 6) + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  int words_per_row() const { return words_per_row_; }
  const std::uint64_t* row(int a) const {
    return words_.data() + static_cast<std::size_t>(a) * words_per_row_;
  }
  std::uint64_t* row(int a) {
    return words_.data() + static_cast<std::size_t>(a) * words_per_row_;
  }

 private:
  int n_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

BinRel compose(const BinRel& r, const BinRel& s);

/// Pointwise AND over a nonempty family; empty input is a contract error
/// (the intersection over an empty family would silently be ∇).
BinRel intersect(const std::vector<BinRel>& rels);

BinRel symmetric_closure(BinRel r);
BinRel transitive_closure(BinRel r);

/// Deterministic total order used for every list of relations we emit:
/// fewer pairs first, ties broken by the first differing row-major bit
/// (the relation containing that pair sorts first).
bool canonical_less(const BinRel& a, const BinRel& b);

struct RelOrder {
  bool operator()(const BinRel& a, const BinRel& b) const {
    return canonical_less(a, b);
  }
};

}  // namespace tolrep
