#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"
#include "tolrep/representability.hpp"

namespace tolrep {

/// α∘β∘α∘… with `factors` alternating factors, starting with `first`.
BinRel compose_chain(const BinRel& first, const BinRel& second, int factors);

struct PermutabilityWitness {
  BinRel alpha;
  BinRel beta;
  std::pair<int, int> missing;  // in one chain, not the other
};

struct NPermResult {
  bool permutable = false;
  int pairs_checked = 0;
  std::optional<PermutabilityWitness> witness;
};

/// Exhaustive over all congruence pairs of the single algebra.
NPermResult is_n_permutable_congruences(const FiniteAlgebra& a, int n);

struct TolCongReport {
  bool all_congruences = false;
  int tolerances = 0;
  std::optional<BinRel> witness;  // first non-transitive tolerance
};

TolCongReport check_tolerances_are_congruences(const FiniteAlgebra& a);

struct ThreePermToleranceRow {
  BinRel theta;
  bool representable = false;        // condition (1)
  bool image_of_congruence = false;  // condition (3), standard shape on A×A
  bool congruence = false;           // condition (5)
};

struct SquareSubalgebraVerdict {
  std::vector<int> universe;  // elements encoded in A×A
  bool three_permutable = false;
};

struct ThreePermReport {
  std::string algebra;
  bool exhaustive = false;  // all subuniverses of A×A enumerated
  std::vector<SquareSubalgebraVerdict> subalgebras;
  bool hypothesis_holds = false;  // every subalgebra of A² 3-permutable
  std::optional<std::vector<int>> failing_subuniverse;  // first failure
  std::vector<ThreePermToleranceRow> rows;
  bool equivalence_asserted = false;  // only meaningful under the hypothesis
  bool equivalence_holds = false;
};

/// Verifies the hypothesis "every subalgebra of A×A has 3-permutable
/// congruences" on enumerated subuniverses (exhaustively for |A| ≤ 4, by
/// bounded generator sets above — flagged non-exhaustive), then evaluates
/// conditions (1), (3), (5) on every tolerance. The equivalence is asserted
/// only when the hypothesis verdict is positive.
ThreePermReport check_3perm_equivalences(const FiniteAlgebra& a,
                                         bool exhaustive_subalgebras,
                                         const SearchOptions& opts = {});

}  // namespace tolrep
