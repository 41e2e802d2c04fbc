#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"
#include "tolrep/hom.hpp"
#include "tolrep/pair_algebra.hpp"
#include "tolrep/relations.hpp"

namespace tolrep {

struct SearchOptions {
  int jobs = 1;
  std::uint64_t max_examined = kDefaultSizeBudget;
  std::uint64_t size_budget = kDefaultSizeBudget;
};

struct SearchStats {
  std::uint64_t space = 0;     // candidate generator sets, 2^|offdiag Θ|
  std::uint64_t examined = 0;  // closures computed, in canonical order
  std::uint64_t pruned = 0;    // skipped: a subset's closure already escaped Θ
};

/// Checkable evidence that Θ = R∘R⌣ together with the image-of-congruence
/// construction on R viewed as a subalgebra of A×A.
struct RepCertificate {
  BinRel theta;
  BinRel witness;        // R: compatible, reflexive, Δ ⊆ R ⊆ Θ
  PairAlgebra pair_alg;  // R itself as the subalgebra B
  Hom phi;               // first projection, surjective
  BinRel beta;           // kernel of the second projection
  BinRel image;          // φ(β); equals theta
  bool verified = false;
  SearchStats stats;
};

struct NonRepCertificate {
  BinRel theta;
  SearchStats stats;
  bool exhausted = false;
};

using RepDecision = std::variant<RepCertificate, NonRepCertificate>;

inline const RepCertificate* certificate(const RepDecision& d) {
  return std::get_if<RepCertificate>(&d);
}
inline const NonRepCertificate* refutation(const RepDecision& d) {
  return std::get_if<NonRepCertificate>(&d);
}

struct LatticeOps {
  int join = -1;
  int meet = -1;
};

/// Indices of the binary operations named "join" and "meet";
/// input_error when the algebra does not designate them.
LatticeOps find_lattice_ops(const FiniteAlgebra& a);

/// The order a ≤ b ⇔ a∨b = b. Verifies the lattice axioms (idempotent,
/// commutative, associative, absorption) and that ≤ is a compatible partial
/// order; otherwise throws input_error("not a lattice: ...").
BinRel lattice_order(const FiniteAlgebra& a);

/// Witness R = ≤ ∩ Θ for a tolerance on a lattice, with both halves of the
/// containment argument re-verified pair by pair. Failure is a
/// contradiction_error: the construction is theorem-backed.
RepCertificate lattice_witness(const FiniteAlgebra& lattice, const BinRel& theta);

/// Complete decision procedure. Candidates are the compatible-reflexive
/// closures of subsets G of the off-diagonal pairs of Θ, ascending by
/// (|G|, lex); any G whose closure escapes Θ prunes all supersets. The
/// first satisfying closure is returned, so the witness is deterministic.
RepDecision is_representable(const FiniteAlgebra& a, const BinRel& theta,
                             const SearchOptions& opts = {});

/// Per-pair verification of the five-condition equivalence chain
///   aΘc ⇔ ∃b aRb ∧ bR⌣c ⇔ ∃b (a,b),(c,b) ∈ R ⇔ ∃b (a,b) β (c,b) ⇔ (a,c) ∈ φ(β).
struct ChainReport {
  int pairs_checked = 0;
  int failures = 0;
  std::vector<std::string> log;  // per pair when detailed
};
ChainReport verify_equiv_chain(const RepCertificate& cert, bool detailed = false);

struct ImageTriple {
  PairAlgebra subalgebra;
  Hom phi;
  BinRel beta;
};

/// The (B, φ, β) triple of the certificate with the full chain re-verified;
/// contradiction_error on any failing pair.
ImageTriple rep_to_congruence_image(const RepCertificate& cert);

/// Reads a witness off an image-of-congruence presentation in the standard
/// shape: B ⊆ A×A with Δ ⊆ B, φ = first projection, β = ker of the second,
/// φ(β) = Θ. Then R = B satisfies Θ = R∘R⌣. Precondition failures name the
/// offending requirement.
RepCertificate extract_witness_from_image(const FiniteAlgebra& a,
                                          const PairAlgebra& b, const BinRel& theta);

/// From scratch re-verification of a certificate (used by tests and the suite).
bool reverify(const FiniteAlgebra& a, const RepCertificate& cert,
              std::string* why = nullptr);

/// Power construction of the weak-representability theorem: the subalgebra
/// B = {(a, a_1..a_λ) : a R_i a_i} of A × A^λ, with φ the first projection
/// and β the kernel of the tail projection. The full power is never built.
struct PowerWitness {
  PairAlgebra pair_alg;
  std::optional<Hom> phi;    // present when the carrier algebra fits the budget
  std::optional<BinRel> beta;
  BinRel image;              // φ(β), computed carrier-side in all cases
  bool fully_materialized = false;
};
PowerWitness build_power_witness(const FiniteAlgebra& a, const BinRel& theta,
                                 const std::vector<RepCertificate>& family,
                                 const SearchOptions& opts = {});

struct WeakRepCertificate {
  BinRel theta;
  std::vector<RepCertificate> family;  // representable T_i ⊇ Θ, ∩ T_i = Θ
  int lambda = 0;                      // family size (greedy-minimal)
  std::optional<PowerWitness> power;   // absent when over budget (flagged)
  bool verified = false;
};

struct WeakRepNegative {
  BinRel theta;
  std::vector<BinRel> representable_supersets;
  BinRel intersection;            // strictly above theta
  std::pair<int, int> witness_pair;  // in the intersection, not in theta
};

using WeakRepDecision = std::variant<WeakRepCertificate, WeakRepNegative>;

inline const WeakRepCertificate* certificate(const WeakRepDecision& d) {
  return std::get_if<WeakRepCertificate>(&d);
}
inline const WeakRepNegative* refutation(const WeakRepDecision& d) {
  return std::get_if<WeakRepNegative>(&d);
}

/// Θ is weakly representable iff it equals the intersection of ALL
/// representable tolerances above it — a finite, complete criterion. The
/// reported family is pruned greedily (largest first), so representable
/// inputs always report λ = 1.
WeakRepDecision is_weakly_representable(const FiniteAlgebra& a, const BinRel& theta,
                                        const SearchOptions& opts = {});

struct StrongRepResult {
  std::optional<BinRel> witness;  // R with Θ = (R∘R⌣) ∩ (R⌣∘R)
  SearchStats stats;
  bool exhausted = false;
};

/// Searches the same candidate space as is_representable for an R
/// satisfying Θ = (R∘R⌣) ∩ (R⌣∘R).
StrongRepResult check_strong_rep(const FiniteAlgebra& a, const BinRel& theta,
                                 const SearchOptions& opts = {});

/// aΘb ⇔ ∃c,d: aRc, bRc, dRa, dRb, dRc — for a given R.
bool check_eqm(const FiniteAlgebra& a, const BinRel& theta, const BinRel& r,
               std::string* diagnostic = nullptr);

/// Lattice form: R = ≤ ∩ Θ must satisfy the intersection identity, and the
/// explicit witnesses c = a∨b, d = a∧b must work for every Θ-pair.
struct LatticeEqmReport {
  BinRel witness;
  bool eq_holds = false;
  bool eqm_holds = false;
  bool join_meet_witness_ok = false;
  bool passed() const { return eq_holds && eqm_holds && join_meet_witness_ok; }
};
LatticeEqmReport verify_lattice_eqm(const FiniteAlgebra& lattice, const BinRel& theta);

struct ConditionViolation {
  std::string condition;  // "compatibility", "(0)", "(1)", "(2)", "(3)"
  std::vector<int> elements;
  std::string detail;
};

struct LattgenReport {
  std::optional<ConditionViolation> violation;
  int tolerances_checked = 0;
  bool pipeline_ok = false;  // every tolerance representable via R = M ∩ Θ
  bool passed() const { return !violation && pipeline_ok; }
};

/// Generalized-lattice conditions for a given compatible M:
/// (1) a∨a = a; (2) a M (a∨b) and b M (a∨b); (3) a M c ⇒ a = a∧c = c∧a.
/// They suffice for every tolerance to be representable through R = M ∩ Θ;
/// on pass the pipeline runs over every enumerated tolerance and verifies it.
LattgenReport lattgen_check(const FiniteAlgebra& a, int join_index, int meet_index,
                            const BinRel& m, const SearchOptions& opts = {});

/// Same pipeline with M derived as a M b ⇔ a∨b = b and condition (0)
/// expressing that this M is compatible with both operations. Requires the
/// algebra to have exactly two binary operations (the first is ∨).
LattgenReport lattgen2_check(const FiniteAlgebra& a, const SearchOptions& opts = {});

}  // namespace tolrep
