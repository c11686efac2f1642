// Acceptance sweep: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <iostream>

#include "linlay/acceptance.hpp"

int main() {
  auto results = linlay::acceptance::runAll(std::cout);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << results.size() - failed << "/" << results.size() << " criteria)\n";
  return failed == 0 ? 0 : 1;
}
