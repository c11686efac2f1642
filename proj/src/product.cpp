#include "linlay/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace linlay {

ProductKind productKindFromName(const std::string& name) {
  if (name == "cartesian") return ProductKind::Cartesian;
  if (name == "direct") return ProductKind::Direct;
  if (name == "strong") return ProductKind::Strong;
  throw std::invalid_argument("unknown product kind '" + name + "'");
}

std::string productKindName(ProductKind kind) {
  switch (kind) {
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Direct: return "direct";
    case ProductKind::Strong: return "strong";
  }
  return "?";
}

std::string edgeClassName(EdgeClass c) {
  switch (c) {
    case EdgeClass::A: return "A";
    case EdgeClass::B: return "B";
    case EdgeClass::Direct: return "direct";
  }
  return "?";
}

EdgeClass edgeClassFromName(const std::string& name) {
  if (name == "A") return EdgeClass::A;
  if (name == "B") return EdgeClass::B;
  if (name == "direct") return EdgeClass::Direct;
  throw std::invalid_argument("unknown edge class '" + name + "'");
}

ProductGraph::ProductGraph(Graph a, Graph b, ProductKind kind)
    : a_(std::move(a)), b_(std::move(b)), kind_(kind) {
  if (a_.vertexCount() == 0 || b_.vertexCount() == 0) {
    throw std::invalid_argument("product factors must be non-empty");
  }
  const int nB = b_.vertexCount();
  const bool wantA = kind != ProductKind::Direct;
  const bool wantB = kind != ProductKind::Direct;
  const bool wantDirect = kind != ProductKind::Cartesian;

  std::vector<std::pair<Edge, EdgeClass>> tagged;
  if (wantA) {
    for (int v = 0; v < a_.vertexCount(); ++v)
      for (const Edge& e : b_.edges())
        tagged.push_back({makeEdge(v * nB + e.u, v * nB + e.v), EdgeClass::A});
  }
  if (wantB) {
    for (const Edge& e : a_.edges())
      for (int x = 0; x < nB; ++x)
        tagged.push_back({makeEdge(e.u * nB + x, e.v * nB + x), EdgeClass::B});
  }
  if (wantDirect) {
    for (const Edge& ea : a_.edges())
      for (const Edge& eb : b_.edges()) {
        tagged.push_back({makeEdge(ea.u * nB + eb.u, ea.v * nB + eb.v), EdgeClass::Direct});
        tagged.push_back({makeEdge(ea.u * nB + eb.v, ea.v * nB + eb.u), EdgeClass::Direct});
      }
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<Edge> edges;
  edges.reserve(tagged.size());
  classes_.reserve(tagged.size());
  for (const auto& [e, c] : tagged) {
    edges.push_back(e);
    classes_.push_back(c);
  }
  graph_ = Graph(a_.vertexCount() * nB, std::move(edges));
  // The three classes are mutually exclusive for a simple factor pair, so no
  // duplicates can have been collapsed.
  if (graph_.edgeCount() != static_cast<int>(classes_.size())) {
    throw std::logic_error("product edge classification produced duplicates");
  }
}

EdgeClass ProductGraph::edgeClass(const Edge& e) const {
  int idx = graph_.edgeIndex(e.u, e.v);
  if (idx < 0) throw std::invalid_argument("edge not present in product");
  return classes_[idx];
}

ProductGraph product(const Graph& a, const Graph& b, ProductKind kind) {
  return ProductGraph(a, b, kind);
}

}  // namespace linlay
