// Command-line surface: classification, representability decisions,
// witness constructions, the counterexample builder, permutability checks,
// and the verification suite. All reports are plain `KEY value` lines with
// deterministic ordering; exit codes are
//   0 success / property verified
//   1 property refuted (a certificate or named violation was printed)
//   2 input error
//   3 resource budget exceeded
//   4 internal verification failure (indicates a bug)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tolrep/catalog.hpp"
#include "tolrep/counterexample.hpp"
#include "tolrep/io.hpp"
#include "tolrep/permutability.hpp"
#include "tolrep/representability.hpp"
#include "tolrep/verify_suite.hpp"

namespace {

using namespace tolrep;

struct CommonArgs {
  std::string algebra;
  std::string rel_file;
  std::string theta_inline;
  int jobs = 1;
  std::uint64_t budget = kDefaultSizeBudget;
};

SearchOptions search_options(const CommonArgs& args) {
  SearchOptions so;
  so.jobs = args.jobs;
  so.size_budget = args.budget;
  so.max_examined = args.budget;
  return so;
}

FiniteAlgebra resolve_algebra(const std::string& name) {
  if (const FiniteAlgebra* a = find_in_catalog(name)) return *a;
  return load_algebra(name);
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw input_error("expected pairs like \"0-1,1-2\", got '" + item + "'");
    pairs.emplace_back(std::stoi(item.substr(0, dash)),
                       std::stoi(item.substr(dash + 1)));
  }
  return pairs;
}

/// --rel file wins; --theta builds Δ ∪ the symmetric closure of the pairs.
BinRel resolve_relation(const CommonArgs& args, const FiniteAlgebra& algebra) {
  if (!args.rel_file.empty()) {
    const NamedRelation nr = load_relation(args.rel_file);
    if (nr.rel.size() != algebra.size())
      throw input_error("relation size " + std::to_string(nr.rel.size()) +
                        " does not match algebra size " +
                        std::to_string(algebra.size()));
    return nr.rel;
  }
  if (!args.theta_inline.empty()) {
    BinRel r = BinRel::diagonal(algebra.size());
    for (auto [a, b] : parse_pair_list(args.theta_inline)) {
      if (a < 0 || a >= algebra.size() || b < 0 || b >= algebra.size())
        throw input_error("pair element outside the universe");
      r.set(a, b);
      r.set(b, a);
    }
    return r;
  }
  throw input_error("a relation is required: pass --rel <file> or --theta <pairs>");
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_relation = true) {
  cmd->add_option("algebra", args.algebra,
                  "catalog key (C2 C3 C4 N5 M3 Z2 Z3 EX3) or algebra file")
      ->required();
  if (with_relation) {
    cmd->add_option("--rel", args.rel_file, "relation file");
    cmd->add_option("--theta", args.theta_inline,
                    "inline tolerance pairs, e.g. 0-1,1-2 (diagonal implied)");
  }
  cmd->add_option("--jobs", args.jobs, "worker threads (results are identical)");
  cmd->add_option("--budget", args.budget, "size/search budget")
      ->envname("TOLREP_BUDGET");
}

void print_search_line(const SearchStats& stats) {
  std::cout << "SEARCH examined=" << stats.examined << " pruned=" << stats.pruned
            << " space=" << stats.space << "\n";
}

void print_certificate(const RepCertificate& cert) {
  std::cout << "REP yes\n";
  std::cout << "WITNESS " << format_pairs(cert.witness) << "\n";
  std::cout << "B-SIZE " << cert.pair_alg.carrier_size() << "\n";
  const ChainReport chain = verify_equiv_chain(cert);
  std::cout << "CHAIN-VERIFIED " << (chain.failures == 0 ? "yes" : "no") << "\n";
  if (cert.stats.space > 0) print_search_line(cert.stats);  // constructed directly otherwise
}

int cmd_list(const CommonArgs& args, bool congruences) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  EnumOptions eo;
  eo.jobs = args.jobs;
  eo.max_relations = args.budget;
  const std::vector<BinRel> rels = congruences ? enumerate_congruences(algebra, eo)
                                               : enumerate_tolerances(algebra, eo);
  std::cout << "ALGEBRA " << algebra.name() << " size=" << algebra.size() << "\n";
  std::cout << (congruences ? "CONGRUENCES " : "TOLERANCES ") << rels.size() << "\n";
  for (const BinRel& r : rels) std::cout << format_pairs(r) << "\n";
  return 0;
}

int cmd_classify(const CommonArgs& args) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  const BinRel rel = resolve_relation(args, algebra);
  const RelClass c = classify(algebra, rel);
  std::cout << "REFLEXIVE " << (c.reflexive ? "yes" : "no") << "\n";
  std::cout << "SYMMETRIC " << (c.symmetric ? "yes" : "no") << "\n";
  std::cout << "TRANSITIVE " << (c.transitive ? "yes" : "no") << "\n";
  std::cout << "COMPATIBLE " << (c.compatible ? "yes" : "no") << "\n";
  std::cout << "CLASS "
            << (c.congruence()  ? "congruence"
                : c.tolerance() ? "tolerance"
                                : "other")
            << "\n";
  return 0;
}

int cmd_represent(const CommonArgs& args) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  const BinRel theta = resolve_relation(args, algebra);
  const RepDecision d = is_representable(algebra, theta, search_options(args));
  if (const RepCertificate* cert = certificate(d)) {
    print_certificate(*cert);
  } else {
    const NonRepCertificate* nc = refutation(d);
    std::cout << "REP no\n";
    std::cout << "EXHAUSTED " << (nc->exhausted ? "yes" : "no") << "\n";
    print_search_line(nc->stats);
  }
  return 0;
}

int cmd_weakrep(const CommonArgs& args) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  const BinRel theta = resolve_relation(args, algebra);
  const WeakRepDecision d =
      is_weakly_representable(algebra, theta, search_options(args));
  if (const WeakRepCertificate* cert = certificate(d)) {
    std::cout << "WEAKREP yes\n";
    std::cout << "LAMBDA " << cert->lambda << "\n";
    for (const RepCertificate& member : cert->family)
      std::cout << "MEMBER " << format_pairs(member.theta) << "\n";
    if (cert->power) {
      std::cout << "POWER-CARRIER " << cert->power->pair_alg.carrier_size() << "\n";
      std::cout << "POWER-VERIFIED " << (cert->power->image == theta ? "yes" : "no")
                << "\n";
    } else {
      std::cout << "POWER-CARRIER over-budget\n";
    }
    return 0;
  }
  const WeakRepNegative* neg = refutation(d);
  std::cout << "WEAKREP no\n";
  std::cout << "REPRESENTABLE-SUPERSETS " << neg->representable_supersets.size()
            << "\n";
  std::cout << "INTERSECTION " << format_pairs(neg->intersection) << "\n";
  std::cout << "WITNESS-PAIR (" << neg->witness_pair.first << ","
            << neg->witness_pair.second << ")\n";
  return 0;  // the decision succeeded; the tolerance is simply not weakly representable
}

int cmd_image_witness(const CommonArgs& args, const std::string& b_rel_file,
                      bool detailed) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  const BinRel theta = resolve_relation(args, algebra);
  if (!b_rel_file.empty()) {
    const NamedRelation nr = load_relation(b_rel_file);
    if (nr.rel.size() != algebra.size())
      throw input_error("B relation size does not match the algebra");
    CompatibilityViolation v;
    if (!is_compatible(algebra, nr.rel, &v))
      throw input_error("B is not compatible: " + v.describe(algebra));
    const PairAlgebra b = subalgebra_on_pairs(algebra, nr.rel);
    const RepCertificate cert = extract_witness_from_image(algebra, b, theta);
    std::cout << "EXTRACTED yes\n";
    print_certificate(cert);
    return 0;
  }
  const RepDecision d = is_representable(algebra, theta, search_options(args));
  if (const RepCertificate* cert = certificate(d)) {
    const ImageTriple triple = rep_to_congruence_image(*cert);
    print_certificate(*cert);
    std::cout << "BETA-PAIRS " << triple.beta.count() << "\n";
    if (detailed)
      for (const std::string& line : verify_equiv_chain(*cert, true).log)
        std::cout << "CHAIN " << line << "\n";
    return 0;
  }
  std::cout << "REP no\n";
  print_search_line(refutation(d)->stats);
  return 1;
}

int cmd_strong_rep(const CommonArgs& args) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  const BinRel theta = resolve_relation(args, algebra);
  const StrongRepResult r = check_strong_rep(algebra, theta, search_options(args));
  if (r.witness) {
    std::cout << "STRONGREP yes\n";
    std::cout << "WITNESS " << format_pairs(*r.witness) << "\n";
    std::cout << "EQM-HOLDS " << (check_eqm(algebra, theta, *r.witness) ? "yes" : "no")
              << "\n";
  } else {
    std::cout << "STRONGREP no\n";
    std::cout << "EXHAUSTED " << (r.exhausted ? "yes" : "no") << "\n";
  }
  print_search_line(r.stats);
  bool is_lattice = true;
  try {
    find_lattice_ops(algebra);
  } catch (const input_error&) {
    is_lattice = false;
  }
  if (is_lattice) {
    const LatticeEqmReport lr = verify_lattice_eqm(algebra, theta);
    std::cout << "LATTICE-EQ " << (lr.eq_holds ? "yes" : "no") << "\n";
    std::cout << "LATTICE-EQM " << (lr.eqm_holds ? "yes" : "no") << "\n";
    std::cout << "LATTICE-JOIN-MEET-WITNESS "
              << (lr.join_meet_witness_ok ? "yes" : "no") << "\n";
    if (!lr.passed()) return 1;
  }
  return r.witness ? 0 : 1;
}

void print_lattgen_report(const LattgenReport& report) {
  if (report.violation) {
    std::cout << "VIOLATION " << report.violation->condition << " at";
    for (int e : report.violation->elements) std::cout << " " << e;
    std::cout << "\n";
    std::cout << "DETAIL " << report.violation->detail << "\n";
    return;
  }
  std::cout << "CONDITIONS pass\n";
  std::cout << "TOLERANCES " << report.tolerances_checked << "\n";
  std::cout << "ALL-REPRESENTABLE " << (report.pipeline_ok ? "yes" : "no") << "\n";
}

int cmd_lattgen(const CommonArgs& args, const std::string& m_rel_file) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  BinRel m(algebra.size());
  if (!m_rel_file.empty()) {
    const NamedRelation nr = load_relation(m_rel_file);
    if (nr.rel.size() != algebra.size())
      throw input_error("M relation size does not match the algebra");
    m = nr.rel;
  } else {
    m = lattice_order(algebra);
  }
  const LatticeOps lo = find_lattice_ops(algebra);
  const LattgenReport report =
      lattgen_check(algebra, lo.join, lo.meet, m, search_options(args));
  print_lattgen_report(report);
  return report.passed() ? 0 : 1;
}

int cmd_lattgen2(const CommonArgs& args) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  const LattgenReport report = lattgen2_check(algebra, search_options(args));
  print_lattgen_report(report);
  return report.passed() ? 0 : 1;
}

int cmd_counterexample(int size, const std::string& theta_pairs,
                       const std::string& out_file, const CommonArgs& args) {
  ExAlgebraSpec spec;
  spec.n = size;
  spec.theta_pairs = parse_pair_list(theta_pairs);
  const FiniteAlgebra ex = build_ex_algebra(spec);
  const BinRel theta = ex_theta(spec);
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw input_error("cannot write '" + out_file + "'");
    write_algebra(out, ex);
  } else {
    write_algebra(std::cout, ex);
  }
  ExOptions options;
  options.search = search_options(args);
  const ExReport report = verify_ex_properties(ex, theta, options);
  std::cout << "OPS " << ex.ops().size() << "\n";
  std::cout << "THETA-TOLERANCE " << (report.theta_is_tolerance ? "yes" : "no")
            << "\n";
  std::cout << "PRINCIPAL-CLOSURES-CONTAIN-THETA "
            << (report.principal_closures_contain_theta ? "yes" : "no") << "\n";
  std::cout << "THETA-SQUARE-STRICT "
            << (report.theta_strictly_below_square ? "yes" : "no") << "\n";
  std::cout << "REP no\n";
  std::cout << "WEAKREP no\n";
  print_search_line(report.rep_stats);
  std::cout << "POWER-SEARCH bound=" << report.power_bound << " candidates="
            << report.power_candidates_checked << " found="
            << (report.power_witness_found ? "yes" : "no") << "\n";
  if (report.power_witness_found)
    std::cout << "POWER-WITNESS " << report.power_witness_detail << "\n";
  return 0;
}

int cmd_npermutable(const CommonArgs& args, int bound, bool exhaustive_squares) {
  const FiniteAlgebra algebra = resolve_algebra(args.algebra);
  if (bound < 2) throw input_error("--n must be at least 2");
  bool all_pass = true;
  for (int n = 2; n <= bound; ++n) {
    const NPermResult r = is_n_permutable_congruences(algebra, n);
    std::cout << "NPERM n=" << n << " verdict=" << (r.permutable ? "yes" : "no");
    if (r.witness)
      std::cout << " witness=alpha:" << format_pairs(r.witness->alpha)
                << "|beta:" << format_pairs(r.witness->beta) << "|missing:("
                << r.witness->missing.first << "," << r.witness->missing.second
                << ")";
    std::cout << "\n";
    all_pass = all_pass && r.permutable;
  }
  if (exhaustive_squares) {
    const ThreePermReport rep =
        check_3perm_equivalences(algebra, true, search_options(args));
    std::cout << "3PERM-SQUARES exhaustive=" << (rep.exhaustive ? "yes" : "no")
              << " subalgebras=" << rep.subalgebras.size() << " hypothesis="
              << (rep.hypothesis_holds ? "holds" : "fails") << "\n";
    for (const ThreePermToleranceRow& row : rep.rows)
      std::cout << "3PERM-TOLERANCE rep=" << (row.representable ? "yes" : "no")
                << " image=" << (row.image_of_congruence ? "yes" : "no")
                << " cong=" << (row.congruence ? "yes" : "no") << " "
                << format_pairs(row.theta) << "\n";
    if (rep.equivalence_asserted)
      std::cout << "3PERM-EQUIVALENCE "
                << (rep.equivalence_holds ? "verified" : "refuted") << "\n";
    else
      std::cout << "3PERM-EQUIVALENCE not-asserted\n";
    if (rep.equivalence_asserted && !rep.equivalence_holds) return 1;
  }
  return all_pass ? 0 : 1;
}

int cmd_verify_suite(int jobs, std::uint64_t budget) {
  SuiteOptions opts;
  opts.jobs = jobs;
  opts.size_budget = budget;
  const std::vector<CriterionResult> results = run_verify_suite(opts);
  std::cout << render_report(results);
  for (const CriterionResult& r : results)
    std::cerr << "# criterion " << r.number << " took " << r.seconds << "s\n";
  return all_passed(results) ? 0 : 1;
}

int cmd_catalog() {
  for (const CatalogEntry& e : catalog())
    std::cout << e.key << " size=" << e.algebra.size() << " ops="
              << e.algebra.ops().size() << " -- " << e.provenance << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite universal-algebra workbench for tolerance representability"};
  app.require_subcommand(1);

  CommonArgs args;
  int exit_code = 0;
  std::string b_rel_file, m_rel_file, out_file, theta_pairs;
  bool detailed = false, exhaustive_squares = false;
  int ex_size = 0, nperm_bound = 3;
  int suite_jobs = 1;
  std::uint64_t suite_budget = kDefaultSizeBudget;

  auto* list_t = app.add_subcommand("list-tolerances", "enumerate all tolerances");
  add_common(list_t, args, false);
  list_t->callback([&] { exit_code = cmd_list(args, false); });

  auto* list_c = app.add_subcommand("list-congruences", "enumerate all congruences");
  add_common(list_c, args, false);
  list_c->callback([&] { exit_code = cmd_list(args, true); });

  auto* cls = app.add_subcommand("classify", "classify a relation");
  add_common(cls, args);
  cls->callback([&] { exit_code = cmd_classify(args); });

  auto* rep = app.add_subcommand("represent", "decide representability");
  add_common(rep, args);
  rep->callback([&] { exit_code = cmd_represent(args); });

  auto* weak = app.add_subcommand("weakrep", "decide weak representability");
  add_common(weak, args);
  weak->callback([&] { exit_code = cmd_weakrep(args); });

  auto* img = app.add_subcommand("image-witness",
                                 "image-of-congruence construction / extraction");
  add_common(img, args);
  img->add_option("--b-rel", b_rel_file, "relation file for B (extraction mode)");
  img->add_flag("--detailed", detailed, "print the per-pair equivalence chain");
  img->callback([&] { exit_code = cmd_image_witness(args, b_rel_file, detailed); });

  auto* strong = app.add_subcommand("strong-rep", "strong representation identities");
  add_common(strong, args);
  strong->callback([&] { exit_code = cmd_strong_rep(args); });

  auto* lg = app.add_subcommand("lattgen-check", "generalized-lattice conditions");
  add_common(lg, args, false);
  lg->add_option("--m-rel", m_rel_file, "relation file for M (default: lattice order)");
  lg->callback([&] { exit_code = cmd_lattgen(args, m_rel_file); });

  auto* lg2 = app.add_subcommand("lattgen2-check",
                                 "derived-M generalized-lattice conditions");
  add_common(lg2, args, false);
  lg2->callback([&] { exit_code = cmd_lattgen2(args); });

  auto* ex = app.add_subcommand("counterexample",
                                "build and verify the unary counterexample");
  ex->add_option("--size", ex_size, "universe size")->required();
  ex->add_option("--theta", theta_pairs, "tolerance pairs, e.g. 0-1,1-2")->required();
  ex->add_option("--out", out_file, "write the algebra file here instead of stdout");
  ex->add_option("--jobs", args.jobs, "worker threads");
  ex->add_option("--budget", args.budget, "size/search budget")->envname("TOLREP_BUDGET");
  ex->callback([&] { exit_code = cmd_counterexample(ex_size, theta_pairs, out_file, args); });

  auto* np = app.add_subcommand("npermutable", "n-permutability of congruences");
  add_common(np, args, false);
  np->add_option("--n", nperm_bound, "check n = 2..bound (default 3)");
  np->add_flag("--exhaustive-squares", exhaustive_squares,
               "verify the 3-permutable-squares hypothesis and conditions");
  np->callback([&] { exit_code = cmd_npermutable(args, nperm_bound, exhaustive_squares); });

  auto* suite = app.add_subcommand("verify-suite", "run every acceptance criterion");
  suite->add_option("--jobs", suite_jobs, "worker threads");
  suite->add_option("--budget", suite_budget, "size/search budget")
      ->envname("TOLREP_BUDGET");
  suite->callback([&] { exit_code = cmd_verify_suite(suite_jobs, suite_budget); });

  auto* cat = app.add_subcommand("catalog", "list the built-in algebras");
  cat->callback([&] { exit_code = cmd_catalog(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const tolrep::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tolrep::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
