#include "tolrep/verify_suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "tolrep/catalog.hpp"
#include "tolrep/counterexample.hpp"
#include "tolrep/io.hpp"
#include "tolrep/naive.hpp"
#include "tolrep/permutability.hpp"
#include "tolrep/representability.hpp"

namespace tolrep {

namespace {

struct SuiteContext {
  SuiteOptions opts;
  std::vector<RepCertificate> certificates;  // collected by criteria 1 and 2
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure(message);
}

SearchOptions search_options(const SuiteContext& ctx) {
  SearchOptions so;
  so.jobs = ctx.opts.jobs;
  so.size_budget = ctx.opts.size_budget;
  return so;
}

const FiniteAlgebra& entry(const std::string& key) {
  const FiniteAlgebra* a = find_in_catalog(key);
  if (!a) throw CheckFailure("catalog entry '" + key + "' missing");
  return *a;
}

// ---- criterion bodies ------------------------------------------------

// Every tolerance on every catalog lattice is representable through
// R = ≤ ∩ Θ, with the image construction verified; counts frozen from the
// naive-oracle enumeration.
std::string criterion_lattice_representability(SuiteContext& ctx) {
  const std::pair<const char*, int> expected[] = {
      {"C2", 2}, {"C3", 5}, {"C4", 14}, {"N5", 5}, {"M3", 2}};
  EnumOptions eo;
  eo.jobs = ctx.opts.jobs;
  std::ostringstream detail;
  detail << "tolerances";
  int certificates = 0;
  for (const auto& [key, count] : expected) {
    const FiniteAlgebra& lattice = entry(key);
    const std::vector<BinRel> tols = enumerate_tolerances(lattice, eo);
    require(static_cast<int>(tols.size()) == count,
            std::string(key) + ": expected " + std::to_string(count) +
                " tolerances, enumerated " + std::to_string(tols.size()));
    for (const BinRel& theta : tols) {
      RepCertificate cert = lattice_witness(lattice, theta);
      require(cert.verified, std::string(key) + ": witness not verified");
      require(compose(cert.witness, cert.witness.converse()) == theta,
              std::string(key) + ": composition identity failed");
      const ImageTriple triple = rep_to_congruence_image(cert);  // throws on chain failure
      require(image_of_relation(triple.phi, triple.beta) == theta,
              std::string(key) + ": image differs from theta");
      ++certificates;
      ctx.certificates.push_back(std::move(cert));
    }
    detail << " " << key << "=" << count;
  }
  detail << " certificates=" << certificates;
  return detail.str();
}

// The search agrees with the naive direct-subset oracle on every tolerance
// of every catalog algebra (all have size <= 5).
std::string criterion_decision_completeness(SuiteContext& ctx) {
  EnumOptions eo;
  eo.jobs = ctx.opts.jobs;
  int tolerances = 0, disagreements = 0;
  for (const CatalogEntry& e : catalog()) {
    require(e.algebra.size() <= 5, e.key + ": unexpectedly large");
    for (const BinRel& theta : enumerate_tolerances(e.algebra, eo)) {
      ++tolerances;
      const RepDecision d = is_representable(e.algebra, theta, search_options(ctx));
      const bool main_says = certificate(d) != nullptr;
      const bool oracle_says = naive::representable(e.algebra, theta, ctx.opts.jobs);
      if (main_says != oracle_says) ++disagreements;
      if (const RepCertificate* c = certificate(d))
        ctx.certificates.push_back(*c);
    }
  }
  require(disagreements == 0,
          std::to_string(disagreements) + " disagreements with the naive oracle");
  std::ostringstream detail;
  detail << "algebras=" << catalog().size() << " tolerances=" << tolerances
         << " disagreements=0";
  return detail.str();
}

// The unary counterexample: exhaustive refusal, weak refusal, strictness of
// Θ∘Θ, and the principal-closure property.
std::string criterion_counterexample(SuiteContext& ctx) {
  const FiniteAlgebra& ex3 = entry("EX3");
  const BinRel theta = path_tolerance(3);
  ExOptions options;
  options.search = search_options(ctx);
  const ExReport report = verify_ex_properties(ex3, theta, options);
  require(report.rep_exhausted, "search did not exhaust the candidate space");
  require(!report.representable && !report.weakly_representable,
          "representability decisions not negative");
  require(report.theta_strictly_below_square, "theta∘theta does not grow");
  require(report.principal_closures_contain_theta &&
              report.principal_pairs_checked == 6,
          "principal closure property not confirmed on all 6 pairs");
  require(report.rep_stats.examined == 16 && report.rep_stats.pruned == 0 &&
              report.rep_stats.space == 16,
          "search statistics drifted from the frozen values");
  std::ostringstream detail;
  detail << "exhausted=yes examined=" << report.rep_stats.examined
         << " weakrep=no principal-closures=" << report.principal_pairs_checked
         << " compose-strict=yes power-witness-found="
         << (report.power_witness_found ? "yes" : "no");
  return detail.str();
}

// The five-condition equivalence chain holds pair by pair on every
// certificate produced so far.
std::string criterion_equivalence_chain(SuiteContext& ctx) {
  require(!ctx.certificates.empty(), "no certificates were collected");
  int pairs = 0, failures = 0;
  for (const RepCertificate& cert : ctx.certificates) {
    const ChainReport r = verify_equiv_chain(cert);
    pairs += r.pairs_checked;
    failures += r.failures;
  }
  require(failures == 0, std::to_string(failures) + " chain failures");
  std::ostringstream detail;
  detail << "certificates=" << ctx.certificates.size() << " pairs-checked=" << pairs
         << " failures=0";
  return detail.str();
}

// Strong representation identities on every catalog lattice tolerance with
// the explicit join/meet witnesses.
std::string criterion_strong_representation(SuiteContext& ctx) {
  EnumOptions eo;
  eo.jobs = ctx.opts.jobs;
  int checked = 0;
  for (const char* key : {"C2", "C3", "C4", "N5", "M3"}) {
    const FiniteAlgebra& lattice = entry(key);
    for (const BinRel& theta : enumerate_tolerances(lattice, eo)) {
      const LatticeEqmReport r = verify_lattice_eqm(lattice, theta);
      require(r.eq_holds, std::string(key) + ": intersection identity failed");
      require(r.eqm_holds, std::string(key) + ": middle-element identity failed");
      require(r.join_meet_witness_ok,
              std::string(key) + ": join/meet witnesses failed");
      ++checked;
    }
  }
  std::ostringstream detail;
  detail << "lattices=5 tolerances=" << checked
         << " eq-failures=0 eqm-failures=0";
  return detail.str();
}

// Weak representability: power witnesses verify, and λ = 1 coincides with
// plain representability.
std::string criterion_weak_representability(SuiteContext& ctx) {
  EnumOptions eo;
  eo.jobs = ctx.opts.jobs;
  int weakly = 0, negative = 0, lambda_one = 0;
  for (const CatalogEntry& e : catalog()) {
    for (const BinRel& theta : enumerate_tolerances(e.algebra, eo)) {
      const WeakRepDecision wd =
          is_weakly_representable(e.algebra, theta, search_options(ctx));
      const RepDecision rd = is_representable(e.algebra, theta, search_options(ctx));
      const RepCertificate* plain = certificate(rd);
      if (const WeakRepCertificate* cert = certificate(wd)) {
        ++weakly;
        require(cert->verified, e.key + ": weak certificate not verified");
        require(cert->power.has_value(),
                e.key + ": power witness missing at catalog scale");
        require(cert->power->image == theta,
                e.key + ": power witness image differs from theta");
        require(cert->power->fully_materialized,
                e.key + ": power witness not fully materialized");
        require((cert->lambda == 1) == (plain != nullptr),
                e.key + ": lambda=1 does not coincide with representability");
        if (cert->lambda == 1) {
          ++lambda_one;
          require(cert->family.front().theta == theta,
                  e.key + ": lambda=1 family member differs from theta");
          require(cert->family.front().witness == plain->witness,
                  e.key + ": lambda=1 witness differs from the plain certificate");
        }
      } else {
        ++negative;
        require(plain == nullptr,
                e.key + ": representable but not weakly representable");
      }
    }
  }
  std::ostringstream detail;
  detail << "weakly-representable=" << weakly << " lambda1=" << lambda_one
         << " negative=" << negative << " power-verified=" << weakly;
  return detail.str();
}

// Permutability checks and both generalized-lattice checkers.
std::string criterion_permutability(SuiteContext& ctx) {
  for (const char* key : {"Z2", "Z3"}) {
    const FiniteAlgebra& g = entry(key);
    require(check_tolerances_are_congruences(g).all_congruences,
            std::string(key) + ": a tolerance is not a congruence");
    require(is_n_permutable_congruences(g, 2).permutable,
            std::string(key) + ": congruences do not 2-permute");
  }
  {
    const TolCongReport r = check_tolerances_are_congruences(entry("C3"));
    require(!r.all_congruences, "C3: expected a non-transitive tolerance");
    require(r.witness && *r.witness == path_tolerance(3),
            "C3: witness differs from the standard tolerance");
  }
  for (const char* key : {"C2", "C3", "C4", "N5", "M3"}) {
    const FiniteAlgebra& lattice = entry(key);
    const LatticeOps lo = find_lattice_ops(lattice);
    const LattgenReport lg = lattgen_check(lattice, lo.join, lo.meet,
                                           lattice_order(lattice),
                                           search_options(ctx));
    require(lg.passed(), std::string(key) + ": lattgen checker failed");
    const LattgenReport lg2 = lattgen2_check(lattice, search_options(ctx));
    require(lg2.passed(), std::string(key) + ": lattgen2 checker failed");
  }
  // Z2 with both operations read as (∨,∧) := (+,+) must fail (1) at a = 1.
  {
    Operation vee{"join", 2, {0, 1, 1, 0}};
    Operation wedge{"meet", 2, {0, 1, 1, 0}};
    const FiniteAlgebra z2vee("Z2vee", 2, {vee, wedge});
    const LattgenReport lg2 = lattgen2_check(z2vee, search_options(ctx));
    require(lg2.violation.has_value() && lg2.violation->condition == "(1)" &&
                lg2.violation->elements == std::vector<int>{1},
            "Z2-as-lattice: lattgen2 violation not named as (1) at a=1");
    BinRel m(2);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        if (z2vee.apply(0, {x, y}) == y) m.set(x, y);
    const LattgenReport lg = lattgen_check(z2vee, 0, 1, m, search_options(ctx));
    require(lg.violation.has_value() && lg.violation->condition == "(1)" &&
                lg.violation->elements == std::vector<int>{1},
            "Z2-as-lattice: lattgen violation not named as (1) at a=1");
  }
  return "Z2=ok Z3=ok C3-witness=ok lattgen=ok lattgen2=ok z2-violations=named";
}

using Body = std::function<std::string(SuiteContext&)>;

CriterionResult run_criterion(int number, const std::string& key,
                              double seconds_budget, const Body& body,
                              SuiteContext& ctx) {
  CriterionResult result;
  result.number = number;
  result.key = key;
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = body(ctx);
    result.pass = true;
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("failed: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (result.pass && seconds_budget > 0 && result.seconds > seconds_budget) {
    result.pass = false;
    result.detail += " (over the " + std::to_string(seconds_budget) + "s budget)";
  }
  return result;
}

std::vector<CriterionResult> run_criteria_1_7(const SuiteOptions& opts) {
  SuiteContext ctx;
  ctx.opts = opts;
  std::vector<CriterionResult> results;
  results.push_back(run_criterion(1, "lattice-representability", 5.0,
                                  criterion_lattice_representability, ctx));
  results.push_back(run_criterion(2, "decision-completeness", 60.0,
                                  criterion_decision_completeness, ctx));
  results.push_back(
      run_criterion(3, "counterexample", 5.0, criterion_counterexample, ctx));
  results.push_back(run_criterion(4, "equivalence-chain", 0.0,
                                  criterion_equivalence_chain, ctx));
  results.push_back(run_criterion(5, "strong-representation", 0.0,
                                  criterion_strong_representation, ctx));
  results.push_back(run_criterion(6, "weak-representability", 0.0,
                                  criterion_weak_representability, ctx));
  results.push_back(
      run_criterion(7, "permutability", 0.0, criterion_permutability, ctx));
  return results;
}

}  // namespace

std::vector<CriterionResult> run_verify_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> results = run_criteria_1_7(opts);

  CriterionResult determinism;
  determinism.number = 8;
  determinism.key = "determinism";
  const auto start = std::chrono::steady_clock::now();
  const std::string base = render_report(results);
  SuiteOptions serial = opts;
  serial.jobs = 1;
  SuiteOptions wide = opts;
  wide.jobs = opts.jobs + 2;
  const std::string serial_report = render_report(run_criteria_1_7(serial));
  const std::string wide_report = render_report(run_criteria_1_7(wide));
  determinism.pass = base == serial_report && base == wide_report;
  determinism.detail = determinism.pass
                           ? "reports-identical=yes jobs={" +
                                 std::to_string(opts.jobs) + ",1," +
                                 std::to_string(wide.jobs) + "}"
                           : "reports differ across runs";
  determinism.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  results.push_back(std::move(determinism));
  return results;
}

std::string render_report(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const CriterionResult& r : results)
    os << "CRITERION " << r.number << " " << r.key << " "
       << (r.pass ? "PASS" : "FAIL") << " " << r.detail << "\n";
  os << "SUITE " << (all_passed(results) ? "PASS" : "FAIL") << "\n";
  return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  if (results.empty()) return false;
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace tolrep
