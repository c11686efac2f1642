#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linlay/graph.hpp"
#include "linlay/product.hpp"

namespace linlay {

enum class Discipline { Stack, Queue, Dispersable };

std::string disciplineName(Discipline d);
Discipline disciplineFromName(const std::string& name);

// A vertex order plus a partition of the edges into pages.
//   stack pages:       no two independent edges cross,
//   queue pages:       no two independent edges nest,
//   dispersable pages: stack pages that are also matchings (1-regular).
struct Layout {
  std::vector<int> order;
  std::vector<std::vector<Edge>> pages;
  Discipline discipline = Discipline::Stack;
};

// One shared vertex order carrying a stack partition and a queue partition
// of the same edge set.
struct SimultaneousLayout {
  std::vector<int> order;
  std::vector<std::vector<Edge>> stackPages;
  std::vector<std::vector<Edge>> queuePages;
};

struct Violation {
  enum class Kind { Structure, Crossing, Nesting, NotMatching };
  Kind kind = Kind::Structure;
  // Which partition of a simultaneous layout; "pages" for plain layouts.
  std::string partition = "pages";
  int page = -1;
  std::optional<Edge> first;
  std::optional<Edge> second;
  std::string reason;
};

std::string violationKindName(Violation::Kind kind);

// nullopt means valid. The first violation in deterministic scan order is
// reported: structural problems first, then pages ascending with edge pairs
// in lexicographic order.
std::optional<Violation> verify(const Graph& g, const Layout& layout);
std::optional<Violation> verify(const Graph& g, const SimultaneousLayout& layout);

// k independent edges that are pairwise nested (rainbow) or pairwise
// crossing (twist).
struct PatternWitness {
  int size = 0;
  std::vector<Edge> edges;  // sorted by left endpoint position
};

struct ExtremalPatterns {
  PatternWitness maxRainbow;
  PatternWitness maxTwist;
};

// Exact maximum rainbow and twist sizes under the order, with witnesses.
// Among maximum witnesses the one with the lexicographically least sequence
// of (left, right) position pairs is returned.
ExtremalPatterns extremalPatterns(const Graph& g, const std::vector<int>& order);

// Queue assignment realizing the rainbow bound: the page of an edge is the
// length of the longest chain of edges strictly nesting over it, so the
// page count equals the maximum rainbow size.
Layout queuesFromOrder(const Graph& g, const std::vector<int>& order);

struct MonotoneSubsequence {
  bool increasing = true;
  std::vector<int> indices;        // positions into the input sequence
  std::vector<long long> values;
};

// For |seq| >= a*b + 1 with distinct entries, returns an increasing
// subsequence of length >= a+1 or a decreasing one of length >= b+1,
// whichever is longer (ties favor increasing). Throws std::invalid_argument
// on short input or duplicates.
MonotoneSubsequence erdosSzekeres(const std::vector<long long>& seq, int a, int b);

// Longest strictly increasing (or decreasing) subsequence with the earliest
// witness in index order.
MonotoneSubsequence longestMonotoneSubsequence(const std::vector<long long>& seq,
                                               bool increasing);

// Edge-count lower bound on the stack number, max(ceil((m-n)/(n-3)), [m>=1]).
// Throws std::invalid_argument for n < 4.
int densityLowerBound(const Graph& g);

struct SeparationResult {
  bool separated = false;
  // When separated: the witnessing pair of consecutive path copies, earlier
  // copy first with respect to the layout order.
  std::optional<std::pair<int, int>> copies;
  // When not separated: product vertices (x, y) with x in copy 0, y in
  // copy 1 and y placed before x.
  std::optional<std::pair<int, int>> interleavedPair;
};

// True iff for some two consecutive copies of factor B all vertices of one
// copy precede all vertices of the other. Factor A must be a path in
// natural form (edges {(i, i+1)}); throws std::invalid_argument otherwise.
SeparationResult isSeparated(const ProductGraph& pg, const Layout& layout);

}  // namespace linlay
