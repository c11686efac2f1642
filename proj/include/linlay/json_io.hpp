#pragma once

#include <json.hpp>

#include "linlay/decomposition.hpp"
#include "linlay/graph.hpp"
#include "linlay/layout.hpp"
#include "linlay/oracle.hpp"
#include "linlay/product.hpp"

namespace linlay {

// JSON schemas:
//   Graph:               {n, edges: [[u, v], ...]}
//   ProductGraph:        {kind, factor_a, factor_b, graph, vertices, edge_classes}
//   Layout:              {order, discipline, pages: [[[u, v], ...], ...]}
//   SimultaneousLayout:  {order, stack_pages, queue_pages}
//   PathDecomposition:   {bags: [[v, ...], ...]}
//   OracleResult:        {value, witness}
// Parsers throw std::invalid_argument on malformed documents.

nlohmann::json toJson(const Graph& g);
Graph graphFromJson(const nlohmann::json& j);

nlohmann::json toJson(const ProductGraph& pg);
ProductGraph productFromJson(const nlohmann::json& j);

nlohmann::json toJson(const Layout& layout);
Layout layoutFromJson(const nlohmann::json& j);

nlohmann::json toJson(const SimultaneousLayout& layout);
SimultaneousLayout simultaneousFromJson(const nlohmann::json& j);

nlohmann::json toJson(const PathDecomposition& pd);
PathDecomposition pathDecompositionFromJson(const nlohmann::json& j);

nlohmann::json toJson(const Violation& violation);
nlohmann::json toJson(const OracleResult& result);

}  // namespace linlay
