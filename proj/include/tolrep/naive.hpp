#pragma once

#include <vector>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"

namespace tolrep::naive {

// Reference implementations by direct definition filtering. They exist to
// cross-check the main algorithms (verify-suite criterion runs and tests)
// and deliberately share none of the closure/pruning machinery.

bool compatible(const FiniteAlgebra& a, const BinRel& r);
bool tolerance(const FiniteAlgebra& a, const BinRel& r);
bool congruence(const FiniteAlgebra& a, const BinRel& r);

/// ∃b: aRb ∧ bSc by the definition, three nested loops.
BinRel compose_direct(const BinRel& r, const BinRel& s);

/// Every tolerance (resp. congruence), by scanning all 2^(n(n-1)/2)
/// symmetric reflexive candidates and filtering. Sorted canonically.
std::vector<BinRel> all_tolerances(const FiniteAlgebra& a);
std::vector<BinRel> all_congruences(const FiniteAlgebra& a);

/// Decides representability by filtering ALL reflexive relations Δ ⊆ R ⊆ Θ
/// directly (no closure shortcut): true iff some compatible one has
/// R∘R⌣ = Θ. Restricting to R ⊆ Θ is sound because reflexivity gives
/// R ⊆ R∘R⌣.
bool representable(const FiniteAlgebra& a, const BinRel& theta, int jobs = 1);

}  // namespace tolrep::naive
