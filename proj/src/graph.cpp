#include "linlay/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace linlay {

Edge makeEdge(int u, int v) {
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (u > v) std::swap(u, v);
  return Edge{u, v};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") out of range for n=" +
                                  std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  adjStart_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) adjStart_[v + 1] = adjStart_[v] + deg[v];
  adjList_.resize(adjStart_[n_]);
  std::vector<int> fill(adjStart_.begin(), adjStart_.end() - 1);
  for (const Edge& e : edges_) {
    adjList_[fill[e.u]++] = e.v;
    adjList_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adjList_.begin() + adjStart_[v], adjList_.begin() + adjStart_[v + 1]);
  }
}

std::span<const int> Graph::neighbors(int v) const {
  return {adjList_.data() + adjStart_[v],
          static_cast<std::size_t>(adjStart_[v + 1] - adjStart_[v])};
}

int Graph::degree(int v) const { return adjStart_[v + 1] - adjStart_[v]; }

int Graph::maxDegree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::hasEdge(int u, int v) const { return edgeIndex(u, v) >= 0; }

int Graph::edgeIndex(int u, int v) const {
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || !(*it == Edge{u, v})) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph pathGraph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycleGraph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph starGraph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph completeGraph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph completeBipartiteGraph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs positive parts");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, std::move(edges));
}

Graph caterpillarGraph(int spine, int legsPerSpineVertex) {
  if (spine < 1 || legsPerSpineVertex < 0) {
    throw std::invalid_argument("caterpillar needs spine >= 1 and legs >= 0");
  }
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
  int next = spine;
  for (int i = 0; i < spine; ++i)
    for (int t = 0; t < legsPerSpineVertex; ++t) edges.push_back({i, next++});
  return Graph(next, std::move(edges));
}

RandomPathwidthResult randomPathwidthGraph(int p, int n, std::uint64_t seed) {
  if (p < 1 || n < 1) throw std::invalid_argument("random_pathwidth needs p >= 1 and n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<int> window;  // at most the p most recently placed vertices
  for (int i = 0; i < n; ++i) {
    if (!window.empty()) {
      int cap = static_cast<int>(window.size());
      int d = std::uniform_int_distribution<int>(0, std::min(p, cap))(rng);
      std::vector<int> pool = window;
      std::shuffle(pool.begin(), pool.end(), rng);
      for (int t = 0; t < d; ++t) edges.push_back(makeEdge(pool[t], i));
    }
    window.push_back(i);
    if (static_cast<int>(window.size()) > p) window.erase(window.begin());
  }
  RandomPathwidthResult result{Graph(n, std::move(edges)), identityOrder(n)};
  return result;
}

GeneratedGraph generateGraph(const std::string& family, const std::vector<int>& params,
                             std::uint64_t seed) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family '" + family + "' expects " +
                                  std::to_string(count) + " parameter(s)");
    }
  };
  if (family == "path") {
    expect(1);
    return {pathGraph(params[0]), std::nullopt};
  }
  if (family == "cycle") {
    expect(1);
    return {cycleGraph(params[0]), std::nullopt};
  }
  if (family == "star") {
    expect(1);
    return {starGraph(params[0]), std::nullopt};
  }
  if (family == "complete") {
    expect(1);
    return {completeGraph(params[0]), std::nullopt};
  }
  if (family == "complete_bipartite") {
    expect(2);
    return {completeBipartiteGraph(params[0], params[1]), std::nullopt};
  }
  if (family == "caterpillar") {
    expect(2);
    return {caterpillarGraph(params[0], params[1]), std::nullopt};
  }
  if (family == "random_pathwidth") {
    // params: p, n; the seed may be given as a third parameter.
    if (params.size() == 3) {
      auto r = randomPathwidthGraph(params[0], params[1], static_cast<std::uint64_t>(params[2]));
      return {std::move(r.graph), std::move(r.witnessOrder)};
    }
    expect(2);
    auto r = randomPathwidthGraph(params[0], params[1], seed);
    return {std::move(r.graph), std::move(r.witnessOrder)};
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertexCount();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition result;
  result.color.resize(n);
  for (int v = 0; v < n; ++v) {
    result.color[v] = color[v] == 0 ? Color::White : Color::Black;
  }
  return result;
}

Graph graphFromEdgeList(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  int lineNo = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (n < 0) {
      if (first.rfind("n=", 0) != 0) {
        throw std::invalid_argument("line " + std::to_string(lineNo) +
                                    ": expected header \"n=<int>\"");
      }
      try {
        std::size_t used = 0;
        n = std::stoi(first.substr(2), &used);
        if (used != first.size() - 2) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineNo) + ": malformed header");
      }
      if (n < 0) throw std::invalid_argument("line " + std::to_string(lineNo) + ": negative n");
      std::string extra;
      if (ls >> extra) {
        throw std::invalid_argument("line " + std::to_string(lineNo) + ": trailing tokens");
      }
      continue;
    }
    int u = 0, v = 0;
    std::istringstream es(line);
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) {
      throw std::invalid_argument("line " + std::to_string(lineNo) + ": expected \"u v\"");
    }
    if (u == v) {
      throw std::invalid_argument("line " + std::to_string(lineNo) + ": self-loop at " +
                                  std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("line " + std::to_string(lineNo) + ": endpoint out of range");
    }
    edges.push_back(makeEdge(u, v));
  }
  if (n < 0) throw std::invalid_argument("missing header \"n=<int>\"");
  return Graph(n, std::move(edges));
}

std::string graphToEdgeList(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertexCount() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

std::vector<int> positionsOf(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] != -1) {
      throw std::invalid_argument("order is not a permutation of 0.." + std::to_string(n - 1));
    }
    pos[v] = i;
  }
  return pos;
}

std::vector<int> identityOrder(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return order;
}

std::vector<int> reversedOrder(std::vector<int> order) {
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace linlay
