// Acceptance suite: runs every criterion and prints one PASS/FAIL line per
// criterion on stdout (timings go to stderr). Exit 0 iff everything passed.
#include <iostream>

#include "tolrep/verify_suite.hpp"

int main() {
  tolrep::SuiteOptions opts;
  opts.jobs = 2;
  const auto results = tolrep::run_verify_suite(opts);
  std::cout << tolrep::render_report(results);
  for (const auto& r : results)
    std::cerr << "# criterion " << r.number << " " << r.key << " took "
              << r.seconds << "s\n";
  return tolrep::all_passed(results) ? 0 : 1;
}
