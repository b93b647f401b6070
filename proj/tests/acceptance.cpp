// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <iostream>

#include "asmorph/acceptance.hpp"

int main() {
  const asmorph::AcceptanceSummary summary = asmorph::run_acceptance(asmorph::Config{}, asmorph::default_golden(), &std::cout);
  int failed = 0;
  for (const auto& r : summary.results) failed += r.status != asmorph::CriterionStatus::Pass;
  std::cout << (summary.results.size() - failed) << "/" << summary.results.size() << " criteria passed\n";
  if (summary.inconsistent()) return 3;
  return failed == 0 ? 0 : 1;
}
