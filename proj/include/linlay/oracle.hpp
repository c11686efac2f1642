#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlay/graph.hpp"
#include "linlay/layout.hpp"

namespace linlay {

// Brute-force search refuses inputs above these limits instead of running
// unbounded; an exceeded time limit aborts with BudgetExceeded rather than
// returning a best-effort value.
struct OracleBudget {
  int maxVertices = 9;
  int maxEdges = 36;
  std::chrono::milliseconds timeLimit = std::chrono::seconds(60);
  // Enumerate vertex orders up to reversal symmetry. Crossing and nesting
  // are preserved under order reversal, so values are unchanged; the switch
  // exists so tests can compare both modes.
  bool pruneReversal = true;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GraphInvariant { StackNumber, QueueNumber, DispersableNumber, Pathwidth };

GraphInvariant invariantFromName(const std::string& name);
std::string invariantName(GraphInvariant which);

struct OracleResult {
  int value = 0;
  // Certifying witness: a layout for the page invariants, an order whose
  // maximum cut equals the value for pathwidth.
  std::optional<Layout> layout;
  std::optional<std::vector<int>> order;
};

// Exact minimum over all vertex orders. Queue number per order is the
// maximum rainbow; stack and dispersable numbers use backtracking page
// assignment over edges sorted by left endpoint; pathwidth is the minimum
// over orders of the maximum vertex cut.
OracleResult exactInvariant(const Graph& g, GraphInvariant which,
                            const OracleBudget& budget = {});

struct PageMinimum {
  int pages = 0;
  Layout layout;
};

// Exact minimum page count for a fixed order. The queue side is the rainbow
// bound (polynomial, no budget); the stack side backtracks within budget.
PageMinimum minPagesForOrder(const Graph& g, const std::vector<int>& order,
                             Discipline discipline, const OracleBudget& budget = {});

}  // namespace linlay
