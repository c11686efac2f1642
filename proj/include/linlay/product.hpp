#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linlay/graph.hpp"

namespace linlay {

enum class ProductKind { Cartesian, Direct, Strong };

ProductKind productKindFromName(const std::string& name);
std::string productKindName(ProductKind kind);

// Classification of a product edge between (v, x) and (u, y):
//   A:      v == u and (x, y) is an edge of factor B (an edge inside a copy
//           of B),
//   B:      x == y and (v, u) is an edge of factor A,
//   Direct: (v, u) is an edge of A and (x, y) is an edge of B.
enum class EdgeClass : std::uint8_t { A, B, Direct };

std::string edgeClassName(EdgeClass c);
EdgeClass edgeClassFromName(const std::string& name);

// A product graph with full provenance: the factors, the vertex bijection
// index <-> (a-vertex, b-vertex), and the class of every edge. The vertex
// for (a, b) is a * |V(B)| + b, so copies of B are contiguous index blocks.
// Immutable after construction.
class ProductGraph {
 public:
  ProductGraph(Graph a, Graph b, ProductKind kind);

  const Graph& graph() const { return graph_; }
  const Graph& factorA() const { return a_; }
  const Graph& factorB() const { return b_; }
  ProductKind kind() const { return kind_; }

  int vertexOf(int a, int b) const { return a * b_.vertexCount() + b; }
  std::pair<int, int> factorsOf(int v) const {
    return {v / b_.vertexCount(), v % b_.vertexCount()};
  }

  // Parallel to graph().edges().
  const std::vector<EdgeClass>& edgeClasses() const { return classes_; }
  EdgeClass edgeClass(const Edge& e) const;

 private:
  Graph a_;
  Graph b_;
  ProductKind kind_;
  Graph graph_;
  std::vector<EdgeClass> classes_;
};

// Throws std::invalid_argument when a factor has no vertices.
ProductGraph product(const Graph& a, const Graph& b, ProductKind kind);

}  // namespace linlay
