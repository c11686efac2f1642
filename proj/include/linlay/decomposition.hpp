#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlay/graph.hpp"
#include "linlay/layout.hpp"

namespace linlay {

// An ordered sequence of bags over a graph's vertices.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;
  int width() const;
};

struct PdVerdict {
  bool valid = false;
  int width = -1;
  std::string reason;  // set when invalid
};

// Checks edge coverage and that every vertex appears in a non-empty
// contiguous run of bags. Bag members must be vertices of g (throws
// std::invalid_argument otherwise); property failures come back as verdicts.
PdVerdict verifyPathDecomposition(const Graph& g, const PathDecomposition& pd);

// Per-position vertex cuts under an order: cuts[i] lists the vertices before
// position i that still have a neighbor at or after position i.
struct CutProfile {
  std::vector<std::vector<int>> cuts;
  int maxCut = 0;
};

CutProfile vertexSeparation(const Graph& g, const std::vector<int>& order);

// Thrown when an order fails the simultaneous 1-stack 1-queue hypothesis.
struct SimultaneousOrderError : std::invalid_argument {
  SimultaneousOrderError(std::string message, Violation witness)
      : std::invalid_argument(std::move(message)), violation(std::move(witness)) {}
  Violation violation;
};

// Width-2 decomposition with exactly n bags, |B_x| <= 3 and v_x in B_x, for
// an order under which no two independent edges cross or nest. Throws
// SimultaneousOrderError carrying the offending pair otherwise.
PathDecomposition pdFrom11Layout(const Graph& g, const std::vector<int>& order);

// Bag-union decomposition of width <= 2*s*q built from the s*q per-page-pair
// edge sets of a verified simultaneous layout.
PathDecomposition pdFromSimultaneous(const Graph& g, const SimultaneousLayout& sim);

}  // namespace linlay
