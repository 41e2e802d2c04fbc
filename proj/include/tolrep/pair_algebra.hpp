#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"
#include "tolrep/hom.hpp"

namespace tolrep {

/// A subalgebra of base^width stored as an explicit sorted carrier of tuples
/// with a carrier-index ↔ tuple bijection. Carriers are tiny relative to the
/// full power, which is never materialized; the index-encoded operation
/// tables are built only while they fit the budget.
class PairAlgebra {
 public:
  PairAlgebra(FiniteAlgebra base, int width,
              std::vector<std::vector<int>> carrier,
              std::uint64_t table_budget = kDefaultSizeBudget);

  const FiniteAlgebra& base() const { return base_; }
  int width() const { return width_; }
  int carrier_size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<std::vector<int>>& carrier() const { return carrier_; }

  /// Carrier index of the tuple, or -1.
  int index_of(std::span<const int> tuple) const;

  bool has_algebra() const { return algebra_.has_value(); }
  /// The carrier re-indexed as a FiniteAlgebra; resource_error when the
  /// operation tables were over budget.
  const FiniteAlgebra& algebra() const;

 private:
  FiniteAlgebra base_;
  int width_;
  std::vector<std::vector<int>> carrier_;
  std::optional<FiniteAlgebra> algebra_;
};

/// R as a subalgebra of A×A ("let b be R itself"). R must be compatible;
/// the violating operation and rows are reported otherwise.
PairAlgebra subalgebra_on_pairs(const FiniteAlgebra& a, const BinRel& r);

/// Coordinate projection as a Hom out of the carrier algebra. Surjective
/// whenever the underlying relation is reflexive (the Hom reports it).
Hom projection_hom(const PairAlgebra& p, int coord);

/// Kernel of the projection onto the given coordinates, computed directly
/// on the carrier: (i,j) related iff the tuples agree on every coordinate
/// in `coords`. Equals kernel(projection) without materializing any power.
BinRel coordinate_kernel(const PairAlgebra& p, const std::vector<int>& coords);

}  // namespace tolrep
