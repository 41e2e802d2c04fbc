#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"
#include "tolrep/representability.hpp"

namespace tolrep {

/// Input for the unary counterexample construction: a reflexive symmetric
/// non-transitive Θ given by its unordered off-diagonal pairs (singletons
/// are accepted and redundant; the diagonal is always present).
struct ExAlgebraSpec {
  int n = 0;
  std::vector<std::pair<int, int>> theta_pairs;
};

BinRel ex_theta(const ExAlgebraSpec& spec);

/// For every Θ-pair {a,b} adds all 2^n unary maps into {a,b} (plus the
/// constant map for each diagonal element), deduplicated by table with the
/// first canonical name kept. Rejects transitive Θ: the construction's
/// conclusion would be false.
FiniteAlgebra build_ex_algebra(const ExAlgebraSpec& spec,
                               const std::string& name = "");

struct ExOptions {
  int power_bound = 2;      // search A^k for k = 2..bound
  int generator_bound = 2;  // generator-set size when exhaustion is infeasible
  SearchOptions search;
};

struct ExReport {
  bool theta_is_tolerance = false;
  int principal_pairs_checked = 0;
  bool principal_closures_contain_theta = false;
  bool theta_strictly_below_square = false;  // Θ ⊊ Θ∘Θ
  bool representable = true;                 // expected false
  bool weakly_representable = true;          // expected false
  SearchStats rep_stats;
  bool rep_exhausted = false;
  int power_bound = 0;
  bool power_search_exhaustive = false;
  std::uint64_t power_candidates_checked = 0;
  bool power_witness_found = false;
  std::string power_witness_detail;
};

/// Re-verifies every claim of the construction: Θ is a tolerance, every
/// principal compatible-reflexive closure of an off-diagonal pair contains
/// Θ, Θ ⊊ Θ∘Θ, and both representability decisions are negative
/// (contradiction_error otherwise — these are theorem-backed). Additionally
/// searches small powers A^k for an image-of-congruence witness through
/// coordinate projections and reports the findings; a miss claims nothing.
ExReport verify_ex_properties(const FiniteAlgebra& ex, const BinRel& theta,
                              const ExOptions& opts = {});

}  // namespace tolrep
