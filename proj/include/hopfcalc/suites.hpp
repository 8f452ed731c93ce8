#pragma once

#include <string>
#include <vector>

namespace hopfcalc {

// One row of the property-check table printed by `hopfcalc check`.
struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample or note; empty when passed
};

// HOPFCALC_MAX_DEGREE, clamped to [1, 12]; `fallback` when unset or unusable.
int env_max_degree(int fallback);

// Runs every property suite. `max_degree` bounds the corpora: word length,
// polynomial degree, and diagram edge count all stay at or below it (each
// suite also applies its own cost-driven cap). Suites that reproduce a
// designed failure pass exactly when the failure shows up as documented.
std::vector<SuiteResult> run_property_suites(int max_degree);

}  // namespace hopfcalc
