#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"

namespace tolrep {

struct RelClass {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool compatible = false;
  bool tolerance() const { return reflexive && symmetric && compatible; }
  bool congruence() const { return tolerance() && transitive; }
};

struct CompatibilityViolation {
  int op_index = -1;
  std::vector<std::pair<int, int>> argument_pairs;  // rows fed coordinatewise
  std::pair<int, int> image{-1, -1};                // resulting pair ∉ R
  std::string describe(const FiniteAlgebra& a) const;
};

/// R is compatible iff it is a subuniverse of A×A under the coordinatewise
/// operations. Nullary operations contribute the single check (c,c) ∈ R.
bool is_compatible(const FiniteAlgebra& a, const BinRel& r,
                   CompatibilityViolation* violation = nullptr);

RelClass classify(const FiniteAlgebra& a, const BinRel& r);
bool is_tolerance(const FiniteAlgebra& a, const BinRel& r);
bool is_congruence(const FiniteAlgebra& a, const BinRel& r);

/// Least reflexive compatible relation containing the generators; computed
/// by full operation sweeps until the fixpoint.
BinRel compatible_reflexive_closure(const FiniteAlgebra& a, const BinRel& generators);
BinRel compatible_reflexive_closure(const FiniteAlgebra& a,
                                    const std::vector<std::pair<int, int>>& generators);

BinRel tolerance_closure(const FiniteAlgebra& a, const BinRel& generators);
BinRel tolerance_closure(const FiniteAlgebra& a,
                         const std::vector<std::pair<int, int>>& generators);

BinRel congruence_closure(const FiniteAlgebra& a, const BinRel& generators);
BinRel congruence_closure(const FiniteAlgebra& a,
                          const std::vector<std::pair<int, int>>& generators);

struct EnumOptions {
  int jobs = 1;
  std::uint64_t max_relations = kDefaultSizeBudget;
};

/// All tolerances (resp. congruences), duplicate-free, sorted canonically.
/// Computed as the join closure of the principal closures of single pairs;
/// complete because every member is the join of the principals it contains.
std::vector<BinRel> enumerate_tolerances(const FiniteAlgebra& a,
                                         const EnumOptions& opts = {});
std::vector<BinRel> enumerate_congruences(const FiniteAlgebra& a,
                                          const EnumOptions& opts = {});

}  // namespace tolrep
