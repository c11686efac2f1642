#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linlay {

// An undirected edge; endpoints are stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order. Throws std::invalid_argument on a self-loop.
Edge makeEdge(int u, int v);

// Simple undirected graph on vertices 0..n-1 with a sorted, duplicate-free
// edge set. Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  // Collapses duplicate edges. Throws std::invalid_argument on self-loops
  // or endpoints outside [0, n).
  Graph(int n, std::vector<Edge> edges);

  int vertexCount() const { return n_; }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors of v in ascending order.
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  int maxDegree() const;
  bool hasEdge(int u, int v) const;
  // Position of the edge in edges(), or -1 when absent.
  int edgeIndex(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adjStart_;  // CSR offsets, size n+1
  std::vector<int> adjList_;
};

// Test families. All throw std::invalid_argument on nonsensical parameters.
Graph pathGraph(int n);
Graph cycleGraph(int n);
Graph starGraph(int leaves);                  // K_{1,leaves}, center 0
Graph completeGraph(int n);
Graph completeBipartiteGraph(int a, int b);
Graph caterpillarGraph(int spine, int legsPerSpineVertex);

struct RandomPathwidthResult {
  Graph graph;
  // Placement order; its maximum vertex cut is at most p by construction.
  std::vector<int> witnessOrder;
};

// Interval-style random graph: vertices are placed left to right and each
// new vertex connects to at most p vertices inside a sliding window of the
// p most recently placed ones. Reproducible for a fixed seed.
RandomPathwidthResult randomPathwidthGraph(int p, int n, std::uint64_t seed);

struct GeneratedGraph {
  Graph graph;
  std::optional<std::vector<int>> witnessOrder;  // random_pathwidth only
};

// Families: path, cycle, star, complete, complete_bipartite, caterpillar,
// random_pathwidth. Throws std::invalid_argument on unknown family or bad
// parameter counts.
GeneratedGraph generateGraph(const std::string& family,
                             const std::vector<int>& params,
                             std::uint64_t seed = 0);

enum class Color : std::uint8_t { White, Black };

struct Bipartition {
  std::vector<Color> color;
  bool isWhite(int v) const { return color[v] == Color::White; }
};

// Proper 2-coloring, or nullopt when g has an odd cycle. Deterministic:
// component roots are taken in increasing vertex order and colored white.
std::optional<Bipartition> bipartition(const Graph& g);

// Text format: first line "n=<int>", then one edge per line "u v".
// '#' starts a comment, blank lines are ignored, duplicates collapse.
Graph graphFromEdgeList(const std::string& text);
std::string graphToEdgeList(const Graph& g);

// Vertex orders are permutations; order[i] is the vertex at position i.
// positionsOf validates and inverts (throws std::invalid_argument).
std::vector<int> positionsOf(const std::vector<int>& order, int n);
std::vector<int> identityOrder(int n);
std::vector<int> reversedOrder(std::vector<int> order);

}  // namespace linlay
