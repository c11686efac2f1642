#include "linlay/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace linlay {

int PathDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

PdVerdict verifyPathDecomposition(const Graph& g, const PathDecomposition& pd) {
  const int n = g.vertexCount();
  for (const auto& bag : pd.bags) {
    for (int v : bag) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("bag member " + std::to_string(v) +
                                    " is not a vertex of the graph");
      }
    }
  }
  std::vector<int> firstBag(n, -1), lastBag(n, -1);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    for (int v : pd.bags[i]) {
      if (firstBag[v] < 0) firstBag[v] = i;
      lastBag[v] = i;
    }
  }
  PdVerdict verdict;
  for (int v = 0; v < n; ++v) {
    if (firstBag[v] < 0) {
      verdict.reason = "vertex " + std::to_string(v) + " appears in no bag";
      return verdict;
    }
    for (int i = firstBag[v]; i <= lastBag[v]; ++i) {
      if (std::find(pd.bags[i].begin(), pd.bags[i].end(), v) == pd.bags[i].end()) {
        verdict.reason = "vertex " + std::to_string(v) +
                         " is missing from bag " + std::to_string(i) +
                         " inside its interval";
        return verdict;
      }
    }
  }
  for (const Edge& e : g.edges()) {
    // Intervals are solid at this point, so the edge is covered iff the two
    // intervals intersect.
    if (std::max(firstBag[e.u], firstBag[e.v]) > std::min(lastBag[e.u], lastBag[e.v])) {
      verdict.reason = "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") is contained in no bag";
      return verdict;
    }
  }
  verdict.valid = true;
  verdict.width = pd.width();
  return verdict;
}

CutProfile vertexSeparation(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertexCount();
  std::vector<int> pos = positionsOf(order, n);
  std::vector<int> lastNeighborPos(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) lastNeighborPos[v] = std::max(lastNeighborPos[v], pos[w]);
  }
  CutProfile profile;
  profile.cuts.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      int x = order[j];
      if (lastNeighborPos[x] >= i) profile.cuts[i].push_back(x);
    }
    std::sort(profile.cuts[i].begin(), profile.cuts[i].end());
    profile.maxCut = std::max(profile.maxCut, static_cast<int>(profile.cuts[i].size()));
  }
  return profile;
}

namespace {

// First independent pair that crosses or nests, in deterministic scan order.
std::optional<Violation> find11Violation(const Graph& g, const std::vector<int>& pos) {
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      int al = std::min(pos[a.u], pos[a.v]), ar = std::max(pos[a.u], pos[a.v]);
      int bl = std::min(pos[b.u], pos[b.v]), br = std::max(pos[b.u], pos[b.v]);
      int lo_l = al, lo_r = ar, hi_l = bl, hi_r = br;
      if (hi_l < lo_l) {
        std::swap(lo_l, hi_l);
        std::swap(lo_r, hi_r);
      }
      if (hi_l > lo_r) continue;  // disjoint spans
      Violation v;
      v.partition = "order";
      v.page = -1;
      v.first = a;
      v.second = b;
      if (hi_r < lo_r) {
        v.kind = Violation::Kind::Nesting;
        v.reason = "edges nest under the order";
      } else {
        v.kind = Violation::Kind::Crossing;
        v.reason = "edges cross under the order";
      }
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

PathDecomposition pdFrom11Layout(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertexCount();
  std::vector<int> pos = positionsOf(order, n);
  if (auto violation = find11Violation(g, pos)) {
    throw SimultaneousOrderError(
        "order is not a simultaneous 1-stack 1-queue layout: " + violation->reason,
        *violation);
  }

  PathDecomposition pd;
  pd.bags.assign(n, {});
  // Peel suffixes: each step handles positions (iPos, k) for the last vertex
  // of the current prefix and recurses on the prefix ending at iPos.
  int k = n;
  while (k > 0) {
    const int last = order[k - 1];
    // Neighbors inside the current prefix.
    int iPos = -1;
    int hPos = -1;
    int degree = 0;
    for (int w : g.neighbors(last)) {
      if (pos[w] >= k - 1) continue;
      ++degree;
      if (iPos < 0 || pos[w] < iPos) iPos = pos[w];
    }
    if (degree == 0) {
      pd.bags[k - 1] = {last};
      --k;
      continue;
    }
    for (int w : g.neighbors(last)) {
      int p = pos[w];
      if (p > iPos && p < k - 1 && (hPos < 0 || p < hPos)) hPos = p;
    }
    // The hypothesis forces every vertex strictly between iPos and k-1 to be
    // adjacent only to the two span endpoints within the prefix.
    for (int x = iPos + 1; x < k - 1; ++x) {
      for (int w : g.neighbors(order[x])) {
        if (pos[w] >= k) continue;
        if (pos[w] != iPos && pos[w] != k - 1) {
          throw std::logic_error(
              "path decomposition trichotomy violated; the layout check let an "
              "invalid pair through");
        }
      }
    }
    const int vi = order[iPos];
    if (degree > 1) {
      for (int x = iPos + 1; x < hPos; ++x) pd.bags[x] = {vi, order[x]};
      pd.bags[hPos] = {vi, order[hPos], last};
      for (int x = hPos + 1; x < k - 1; ++x) pd.bags[x] = {order[x], last};
      pd.bags[k - 1] = {last};
    } else {
      for (int x = iPos + 1; x < k - 1; ++x) pd.bags[x] = {vi, order[x]};
      pd.bags[k - 1] = {vi, last};
    }
    k = iPos + 1;
  }
  for (auto& bag : pd.bags) std::sort(bag.begin(), bag.end());
  return pd;
}

PathDecomposition pdFromSimultaneous(const Graph& g, const SimultaneousLayout& sim) {
  if (auto violation = verify(g, sim)) {
    throw std::invalid_argument("simultaneous layout is invalid: " + violation->reason);
  }
  const int n = g.vertexCount();
  std::vector<int> stackOf(g.edgeCount(), -1), queueOf(g.edgeCount(), -1);
  for (int i = 0; i < static_cast<int>(sim.stackPages.size()); ++i) {
    for (const Edge& e : sim.stackPages[i]) stackOf[g.edgeIndex(e.u, e.v)] = i;
  }
  for (int j = 0; j < static_cast<int>(sim.queuePages.size()); ++j) {
    for (const Edge& e : sim.queuePages[j]) queueOf[g.edgeIndex(e.u, e.v)] = j;
  }
  std::map<std::pair<int, int>, std::vector<Edge>> buckets;
  for (int idx = 0; idx < g.edgeCount(); ++idx) {
    buckets[{stackOf[idx], queueOf[idx]}].push_back(g.edges()[idx]);
  }
  PathDecomposition pd;
  pd.bags.assign(n, {});
  for (int x = 0; x < n; ++x) pd.bags[x] = {sim.order[x]};
  for (const auto& [key, edges] : buckets) {
    Graph sub(n, edges);
    PathDecomposition part = pdFrom11Layout(sub, sim.order);
    for (int x = 0; x < n; ++x) {
      for (int v : part.bags[x]) pd.bags[x].push_back(v);
    }
  }
  for (auto& bag : pd.bags) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  return pd;
}

}  // namespace linlay
