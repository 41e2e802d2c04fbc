#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tolrep/errors.hpp"

namespace tolrep {

/// One finitary operation as a flat table. Arguments are read in
/// lexicographic order with the last argument varying fastest, i.e. the
/// entry for (a_1..a_k) sits at index ((a_1*n + a_2)*n + ...)*n + a_k.
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<int> table;
};

class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int n, std::vector<Operation> ops);

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  const std::vector<Operation>& ops() const { return ops_; }
  const Operation& op(int index) const;

  int apply(int op_index, std::span<const int> args) const;
  int apply(int op_index, std::initializer_list<int> args) const {
    return apply(op_index, std::span<const int>(args.begin(), args.size()));
  }

  /// No bounds checks; for the closure and search inner loops.
  int apply_unchecked(int op_index, const int* args, int k) const {
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * static_cast<std::size_t>(n_) + args[i];
    return ops_[op_index].table[idx];
  }

  /// Same op count and pointwise equal arities.
  bool similar_to(const FiniteAlgebra& other) const;

 private:
  std::string name_;
  int n_;
  std::vector<Operation> ops_;
};

/// Equal sizes and operation tables; names are ignored.
bool structurally_equal(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Direct product with the pair encoding (a,b) ↦ a·|B| + b.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// k-th direct power; tuple encoding is mixed-radix with the last
/// coordinate fastest, so it composes bit-exactly with `product`.
FiniteAlgebra power(const FiniteAlgebra& a, int k,
                    std::uint64_t size_budget = kDefaultSizeBudget);

/// Least superset of `seed` closed under all operations (fixpoint sweeps).
/// An empty seed yields the closure of the constants, possibly empty.
std::vector<int> subuniverse_closure(const FiniteAlgebra& a,
                                     const std::vector<int>& seed);

/// Restriction to a closed subuniverse, re-indexed by position in
/// `universe` (must be sorted, distinct, nonempty, and closed).
FiniteAlgebra subalgebra(const FiniteAlgebra& a, const std::vector<int>& universe);

std::uint64_t encode_tuple(std::span<const int> tuple, int base);
std::vector<int> decode_tuple(std::uint64_t code, int base, int width);

}  // namespace tolrep
