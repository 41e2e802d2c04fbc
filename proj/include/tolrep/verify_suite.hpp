#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tolrep/errors.hpp"

namespace tolrep {

struct CriterionResult {
  int number = 0;
  std::string key;
  bool pass = false;
  std::string detail;   // deterministic, no timings
  double seconds = 0.0;  // reported separately, never part of the report text
};

struct SuiteOptions {
  int jobs = 1;
  std::uint64_t size_budget = kDefaultSizeBudget;
};

/// Runs every acceptance criterion. The determinism criterion re-runs the
/// others twice (jobs = 1 and a different worker count) and requires the
/// rendered reports to be byte-identical.
std::vector<CriterionResult> run_verify_suite(const SuiteOptions& opts = {});

/// One line per criterion plus a SUITE verdict; stable across runs.
std::string render_report(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace tolrep
