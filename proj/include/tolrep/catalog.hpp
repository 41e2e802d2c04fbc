#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"

namespace tolrep {

struct CatalogEntry {
  std::string key;
  FiniteAlgebra algebra;
  std::string provenance;
};

/// Built-in algebras: the chains C2, C3, C4, the pentagon N5 (0 bottom,
/// 1 < 2 on one side, 3 on the other, 4 top), the diamond M3, the groups
/// Z2 and Z3 (product and inverse tables), and EX3 (the unary
/// counterexample algebra for n = 3, Θ = Δ ∪ {01, 12}). Every entry passes
/// its structural self-check at construction.
const std::vector<CatalogEntry>& catalog();

const FiniteAlgebra* find_in_catalog(std::string_view key);

/// Δ plus the adjacent pairs (i, i+1) both ways — the running example
/// tolerance on chains and the defining Θ of the EX algebras.
BinRel path_tolerance(int n);

}  // namespace tolrep
