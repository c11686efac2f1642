#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace linlay::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance sweep, printing one pass/fail line per criterion
// to `out` as results arrive.
std::vector<CriterionResult> runAll(std::ostream& out);

std::string formatLine(const CriterionResult& result);

bool allPassed(const std::vector<CriterionResult>& results);

}  // namespace linlay::acceptance
