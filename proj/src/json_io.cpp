#include "linlay/json_io.hpp"

#include <stdexcept>

namespace linlay {

using nlohmann::json;

namespace {

json edgesToJson(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

std::vector<Edge> edgesFromJson(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Edge> edges;
  for (const json& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw std::invalid_argument(std::string(what) + " entries must be [u, v] pairs");
    }
    edges.push_back(makeEdge(item[0].get<int>(), item[1].get<int>()));
  }
  return edges;
}

json pagesToJson(const std::vector<std::vector<Edge>>& pages) {
  json out = json::array();
  for (const auto& page : pages) out.push_back(edgesToJson(page));
  return out;
}

std::vector<std::vector<Edge>> pagesFromJson(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::vector<Edge>> pages;
  for (const json& page : j) pages.push_back(edgesFromJson(page, what));
  return pages;
}

std::vector<int> intsFromJson(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> values;
  for (const json& item : j) {
    if (!item.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + " entries must be integers");
    }
    values.push_back(item.get<int>());
  }
  return values;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

json toJson(const Graph& g) {
  return json{{"n", g.vertexCount()}, {"edges", edgesToJson(g.edges())}};
}

Graph graphFromJson(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph document must be an object");
  const json& n = field(j, "n");
  if (!n.is_number_integer()) throw std::invalid_argument("'n' must be an integer");
  return Graph(n.get<int>(), edgesFromJson(field(j, "edges"), "edges"));
}

json toJson(const ProductGraph& pg) {
  json vertices = json::array();
  for (int v = 0; v < pg.graph().vertexCount(); ++v) {
    auto [a, b] = pg.factorsOf(v);
    vertices.push_back(json::array({a, b}));
  }
  json classes = json::array();
  for (EdgeClass c : pg.edgeClasses()) classes.push_back(edgeClassName(c));
  return json{{"kind", productKindName(pg.kind())},
              {"factor_a", toJson(pg.factorA())},
              {"factor_b", toJson(pg.factorB())},
              {"graph", toJson(pg.graph())},
              {"vertices", vertices},
              {"edge_classes", classes}};
}

ProductGraph productFromJson(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("product document must be an object");
  ProductGraph pg = product(graphFromJson(field(j, "factor_a")),
                            graphFromJson(field(j, "factor_b")),
                            productKindFromName(field(j, "kind").get<std::string>()));
  // The stored graph is redundant with the factors; use it as a checksum.
  if (j.contains("graph")) {
    Graph stored = graphFromJson(j["graph"]);
    if (!(stored == pg.graph())) {
      throw std::invalid_argument("stored product edges disagree with the factors");
    }
  }
  return pg;
}

json toJson(const Layout& layout) {
  return json{{"order", layout.order},
              {"discipline", disciplineName(layout.discipline)},
              {"pages", pagesToJson(layout.pages)}};
}

Layout layoutFromJson(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("layout document must be an object");
  Layout layout;
  layout.order = intsFromJson(field(j, "order"), "order");
  layout.discipline = disciplineFromName(field(j, "discipline").get<std::string>());
  layout.pages = pagesFromJson(field(j, "pages"), "pages");
  return layout;
}

json toJson(const SimultaneousLayout& layout) {
  return json{{"order", layout.order},
              {"stack_pages", pagesToJson(layout.stackPages)},
              {"queue_pages", pagesToJson(layout.queuePages)}};
}

SimultaneousLayout simultaneousFromJson(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("layout document must be an object");
  SimultaneousLayout layout;
  layout.order = intsFromJson(field(j, "order"), "order");
  layout.stackPages = pagesFromJson(field(j, "stack_pages"), "stack_pages");
  layout.queuePages = pagesFromJson(field(j, "queue_pages"), "queue_pages");
  return layout;
}

json toJson(const PathDecomposition& pd) {
  json bags = json::array();
  for (const auto& bag : pd.bags) bags.push_back(bag);
  return json{{"bags", bags}};
}

PathDecomposition pathDecompositionFromJson(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("decomposition document must be an object");
  const json& bags = field(j, "bags");
  if (!bags.is_array()) throw std::invalid_argument("'bags' must be an array");
  PathDecomposition pd;
  for (const json& bag : bags) pd.bags.push_back(intsFromJson(bag, "bag"));
  return pd;
}

json toJson(const Violation& violation) {
  json out{{"kind", violationKindName(violation.kind)},
           {"partition", violation.partition},
           {"page", violation.page},
           {"reason", violation.reason}};
  json edges = json::array();
  if (violation.first) edges.push_back(json::array({violation.first->u, violation.first->v}));
  if (violation.second) edges.push_back(json::array({violation.second->u, violation.second->v}));
  out["edges"] = edges;
  return out;
}

json toJson(const OracleResult& result) {
  json witness;
  if (result.layout) {
    witness = toJson(*result.layout);
  } else if (result.order) {
    witness = json{{"order", *result.order}};
  }
  return json{{"value", result.value}, {"witness", witness}};
}

}  // namespace linlay
