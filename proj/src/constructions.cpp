#include "linlay/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "linlay/decomposition.hpp"

namespace linlay {

namespace {

void compactPages(std::vector<std::vector<Edge>>& pages) {
  std::vector<std::vector<Edge>> kept;
  for (auto& page : pages) {
    if (page.empty()) continue;
    std::sort(page.begin(), page.end());
    kept.push_back(std::move(page));
  }
  pages = std::move(kept);
}

std::vector<int> pageOfEdge(const Graph& g, const std::vector<std::vector<Edge>>& pages) {
  std::vector<int> result(g.edgeCount(), -1);
  for (int p = 0; p < static_cast<int>(pages.size()); ++p) {
    for (const Edge& e : pages[p]) result[g.edgeIndex(e.u, e.v)] = p;
  }
  return result;
}

}  // namespace

std::vector<int> buildProductOrder(const ProductGraph& pg, const std::vector<int>& aOrder,
                                   const Bipartition& aColors,
                                   const std::vector<int>& bOrder) {
  const int nA = pg.factorA().vertexCount();
  const int nB = pg.factorB().vertexCount();
  positionsOf(aOrder, nA);
  positionsOf(bOrder, nB);
  if (static_cast<int>(aColors.color.size()) != nA) {
    throw std::invalid_argument("bipartition does not match factor A");
  }
  std::vector<int> phi;
  phi.reserve(nA * nB);
  for (int v : aOrder) {
    if (aColors.isWhite(v)) {
      for (int x : bOrder) phi.push_back(pg.vertexOf(v, x));
    } else {
      for (auto it = bOrder.rbegin(); it != bOrder.rend(); ++it) {
        phi.push_back(pg.vertexOf(v, *it));
      }
    }
  }
  return phi;
}

SimultaneousLayout simultaneousFromOrder(const Graph& g, const std::vector<int>& order,
                                         int p) {
  if (p < 0) throw std::invalid_argument("p must be non-negative");
  CutProfile profile = vertexSeparation(g, order);
  if (profile.maxCut > p) {
    throw std::invalid_argument("vertex cut of the order is " +
                                std::to_string(profile.maxCut) + ", above p = " +
                                std::to_string(p));
  }
  const int n = g.vertexCount();
  std::vector<int> pos = positionsOf(order, n);

  SimultaneousLayout sim;
  sim.order = order;
  Layout queues = queuesFromOrder(g, order);
  if (static_cast<int>(queues.pages.size()) > p) {
    // A rainbow of size k forces a cut of size k, so this cannot happen.
    throw std::logic_error("queue count exceeds the vertex separation bound");
  }
  sim.queuePages = std::move(queues.pages);

  std::vector<int> lastNeighborPos(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) lastNeighborPos[v] = std::max(lastNeighborPos[v], pos[w]);
  }
  std::vector<int> stackOfPosition(n, -1);
  std::vector<std::vector<Edge>> stacks(p);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<Edge> forward;
    for (int w : g.neighbors(v)) {
      if (pos[w] > i) forward.push_back(makeEdge(v, w));
    }
    if (forward.empty()) continue;
    // Stacks already used by forward sets of vertices still in the cut at
    // the next position.
    std::vector<bool> banned(p, false);
    for (int j = 0; j < i; ++j) {
      if (stackOfPosition[j] >= 0 && lastNeighborPos[order[j]] >= i + 1) {
        banned[stackOfPosition[j]] = true;
      }
    }
    int chosen = 0;
    while (chosen < p && banned[chosen]) ++chosen;
    if (chosen >= p) {
      throw std::logic_error("no free stack despite the cut bound");
    }
    stackOfPosition[i] = chosen;
    for (const Edge& e : forward) stacks[chosen].push_back(e);
  }
  compactPages(stacks);
  sim.stackPages = std::move(stacks);
  return sim;
}

ProductLayoutResult productStackLayout(const Graph& h, const Layout& hDispersable,
                                       const Graph& g, const SimultaneousLayout& gSim,
                                       ProductKind kind) {
  auto hColors = bipartition(h);
  if (!hColors) throw std::invalid_argument("factor H is not bipartite");
  if (hDispersable.discipline != Discipline::Dispersable) {
    throw std::invalid_argument("H layout must use the dispersable discipline");
  }
  if (auto violation = verify(h, hDispersable)) {
    throw std::invalid_argument("H dispersable layout is invalid: " + violation->reason);
  }
  if (auto violation = verify(g, gSim)) {
    throw std::invalid_argument("G simultaneous layout is invalid: " + violation->reason);
  }

  ProductGraph pg = product(h, g, kind);
  std::vector<int> phi =
      buildProductOrder(pg, hDispersable.order, *hColors, gSim.order);

  const int s = static_cast<int>(gSim.stackPages.size());
  const int q = static_cast<int>(gSim.queuePages.size());
  const int d = static_cast<int>(hDispersable.pages.size());
  std::vector<int> gStackOf = pageOfEdge(g, gSim.stackPages);
  std::vector<int> gQueueOf = pageOfEdge(g, gSim.queuePages);
  std::vector<int> hPageOf = pageOfEdge(h, hDispersable.pages);
  std::vector<int> piPos = positionsOf(hDispersable.order, h.vertexCount());
  std::vector<int> sigmaPos = positionsOf(gSim.order, g.vertexCount());

  int gOff = 0, hOff = 0, dirOff = 0, total = 0;
  switch (kind) {
    case ProductKind::Cartesian:
      hOff = s;
      total = s + d;
      break;
    case ProductKind::Direct:
      total = 2 * d * q;
      break;
    case ProductKind::Strong:
      hOff = s;
      dirOff = s + d;
      total = s + d + 2 * d * q;
      break;
  }

  std::vector<std::vector<Edge>> pages(total);
  const auto& edges = pg.graph().edges();
  const auto& classes = pg.edgeClasses();
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const Edge& e = edges[idx];
    auto [v, x] = pg.factorsOf(e.u);
    auto [u, y] = pg.factorsOf(e.v);
    int page = -1;
    switch (classes[idx]) {
      case EdgeClass::A:
        page = gOff + gStackOf[g.edgeIndex(x, y)];
        break;
      case EdgeClass::B:
        page = hOff + hPageOf[h.edgeIndex(v, u)];
        break;
      case EdgeClass::Direct: {
        // Orient so that v comes first in the H order; the group is then
        // fixed by H's dispersable page, the queue of the G edge, and the
        // direction of the G edge under sigma.
        if (piPos[v] > piPos[u]) {
          std::swap(v, u);
          std::swap(x, y);
        }
        int j = hPageOf[h.edgeIndex(v, u)];
        int i = gQueueOf[g.edgeIndex(x, y)];
        int parity = sigmaPos[x] < sigmaPos[y] ? 0 : 1;
        page = dirOff + (2 * j + parity) * q + i;
        break;
      }
    }
    pages[page].push_back(e);
  }
  compactPages(pages);
  return {std::move(pg), Layout{std::move(phi), std::move(pages), Discipline::Stack}};
}

Layout dispersableFromStack(const Graph& g, const Layout& stacks) {
  if (!bipartition(g)) throw std::invalid_argument("graph is not bipartite");
  if (stacks.discipline != Discipline::Stack && stacks.discipline != Discipline::Dispersable) {
    throw std::invalid_argument("input layout must be a stack layout");
  }
  if (auto violation = verify(g, stacks)) {
    throw std::invalid_argument("input stack layout is invalid: " + violation->reason);
  }
  const int n = g.vertexCount();

  Layout result;
  result.order = stacks.order;
  result.discipline = Discipline::Dispersable;

  for (const auto& pageEdges : stacks.pages) {
    std::vector<Edge> sorted = pageEdges;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> degree(n, 0);
    for (const Edge& e : sorted) {
      ++degree[e.u];
      ++degree[e.v];
    }
    int maxDeg = 0;
    for (int v = 0; v < n; ++v) maxDeg = std::max(maxDeg, degree[v]);
    if (maxDeg == 0) continue;

    // Proper edge coloring with maxDeg colors via alternating-path flips;
    // bipartiteness keeps the flipped path away from the other endpoint.
    std::vector<std::vector<int>> at(n, std::vector<int>(maxDeg, -1));
    std::vector<int> color(sorted.size(), -1);
    auto freeColor = [&](int v) {
      for (int c = 0; c < maxDeg; ++c) {
        if (at[v][c] < 0) return c;
      }
      throw std::logic_error("no free color at vertex " + std::to_string(v));
    };
    auto otherEnd = [&](int e, int v) { return sorted[e].u == v ? sorted[e].v : sorted[e].u; };
    for (int e = 0; e < static_cast<int>(sorted.size()); ++e) {
      int u = sorted[e].u, v = sorted[e].v;
      int alpha = freeColor(u);
      int beta = freeColor(v);
      if (alpha != beta) {
        std::vector<int> path;
        int cur = v, c = alpha;
        while (at[cur][c] >= 0) {
          int pe = at[cur][c];
          path.push_back(pe);
          cur = otherEnd(pe, cur);
          c = (c == alpha) ? beta : alpha;
        }
        for (int pe : path) {
          at[sorted[pe].u][color[pe]] = -1;
          at[sorted[pe].v][color[pe]] = -1;
        }
        for (int pe : path) {
          color[pe] = (color[pe] == alpha) ? beta : alpha;
          at[sorted[pe].u][color[pe]] = pe;
          at[sorted[pe].v][color[pe]] = pe;
        }
      }
      color[e] = alpha;
      at[u][alpha] = e;
      at[v][alpha] = e;
    }
    for (int c = 0; c < maxDeg; ++c) {
      std::vector<Edge> matching;
      for (int e = 0; e < static_cast<int>(sorted.size()); ++e) {
        if (color[e] == c) matching.push_back(sorted[e]);
      }
      if (!matching.empty()) result.pages.push_back(std::move(matching));
    }
  }
  return result;
}

Layout dispersablePath(int n) {
  if (n < 2) throw std::invalid_argument("dispersable path layout needs n >= 2");
  Layout layout;
  layout.order = identityOrder(n);
  layout.discipline = Discipline::Dispersable;
  std::vector<Edge> odd, even;
  for (int i = 0; i + 1 < n; ++i) {
    (i % 2 == 0 ? odd : even).push_back({i, i + 1});
  }
  layout.pages.push_back(std::move(odd));
  if (!even.empty()) layout.pages.push_back(std::move(even));
  return layout;
}

ProductLayoutResult grid4Stack(int n, int m) {
  if (n < 2 || m < 2) throw std::invalid_argument("grid layout needs n, m >= 2");
  ProductGraph pg = product(pathGraph(n), pathGraph(m), ProductKind::Strong);
  Bipartition colors = *bipartition(pg.factorA());
  std::vector<int> phi =
      buildProductOrder(pg, identityOrder(n), colors, identityOrder(m));

  // Copy pairs alternate two stacks each; within-copy edges join adjacent
  // positions and cross nothing, so they ride along in page 0.
  std::vector<std::vector<Edge>> pages(4);
  const auto& edges = pg.graph().edges();
  const auto& classes = pg.edgeClasses();
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const Edge& e = edges[idx];
    auto [i1, j1] = pg.factorsOf(e.u);
    auto [i2, j2] = pg.factorsOf(e.v);
    int page = 0;
    switch (classes[idx]) {
      case EdgeClass::A:
        page = 0;
        break;
      case EdgeClass::B:
        page = (i1 % 2 == 0) ? 0 : 2;
        break;
      case EdgeClass::Direct: {
        bool up = j2 == j1 + 1;  // i1 < i2 because copies are index blocks
        if (up) {
          page = (i1 % 2 == 0) ? 0 : 2;
        } else {
          page = (i1 % 2 == 0) ? 1 : 3;
        }
        break;
      }
    }
    pages[page].push_back(e);
  }
  compactPages(pages);
  return {std::move(pg), Layout{std::move(phi), std::move(pages), Discipline::Stack}};
}

std::vector<Edge> rainbowFromSeparatedMatching(const std::vector<Edge>& edges,
                                               const std::vector<int>& pos, int s) {
  if (s < 1) throw std::invalid_argument("stack count must be positive");
  if (edges.empty()) throw std::invalid_argument("no edges given");
  const int k = static_cast<int>(edges.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        throw std::invalid_argument("edges must be independent");
      }
    }
  }
  struct Item {
    int l, r;
    Edge edge;
  };
  std::vector<Item> items;
  int maxLeft = -1, minRight = 1 << 30;
  for (const Edge& e : edges) {
    int l = std::min(pos[e.u], pos[e.v]);
    int r = std::max(pos[e.u], pos[e.v]);
    items.push_back({l, r, e});
    maxLeft = std::max(maxLeft, l);
    minRight = std::min(minRight, r);
  }
  if (maxLeft >= minRight) {
    throw std::invalid_argument("left endpoints must all precede right endpoints");
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.l < b.l; });

  // Rank of each right endpoint; an increasing run is a twist, a decreasing
  // run is a rainbow.
  std::vector<int> byRight(k);
  for (int i = 0; i < k; ++i) byRight[i] = i;
  std::sort(byRight.begin(), byRight.end(),
            [&](int a, int b) { return items[a].r < items[b].r; });
  std::vector<long long> seq(k);
  for (int rank = 0; rank < k; ++rank) seq[byRight[rank]] = rank;

  const int target = (k + s - 1) / s;
  MonotoneSubsequence found = erdosSzekeres(seq, s, target - 1);
  if (found.increasing) {
    // The theorem preferred a long increasing run; a decreasing run of the
    // required size may still exist.
    MonotoneSubsequence dec = longestMonotoneSubsequence(seq, false);
    if (static_cast<int>(dec.indices.size()) >= target) {
      found = std::move(dec);
    } else {
      std::vector<Edge> twist;
      for (int i : found.indices) twist.push_back(items[i].edge);
      throw TwistWitnessError("found a twist of size " + std::to_string(twist.size()) +
                                  " in a layout claimed to use " + std::to_string(s) +
                                  " stacks",
                              std::move(twist));
    }
  }
  std::vector<Edge> rainbow;
  for (int i : found.indices) rainbow.push_back(items[i].edge);
  return rainbow;
}

SeparatedExtraction simultaneousFromSeparated(const ProductGraph& pg, const Layout& layout) {
  if (pg.kind() != ProductKind::Strong) {
    throw std::invalid_argument("separated extraction expects a strong product");
  }
  if (layout.discipline != Discipline::Stack) {
    throw std::invalid_argument("separated extraction expects a stack layout");
  }
  if (auto violation = verify(pg.graph(), layout)) {
    throw std::invalid_argument("product layout is invalid: " + violation->reason);
  }
  SeparationResult sep = isSeparated(pg, layout);
  if (!sep.separated) {
    std::string detail;
    if (sep.interleavedPair) {
      detail = "; vertices " + std::to_string(sep.interleavedPair->first) + " and " +
               std::to_string(sep.interleavedPair->second) + " interleave";
    }
    throw std::invalid_argument("layout is not separated" + detail);
  }
  const auto [c1, c2] = *sep.copies;
  const Graph& g = pg.factorB();
  const int nB = g.vertexCount();
  std::vector<int> prodPos = positionsOf(layout.order, pg.graph().vertexCount());

  // Suborder of the first separated copy.
  std::vector<int> sigma1 = identityOrder(nB);
  std::sort(sigma1.begin(), sigma1.end(), [&](int x, int y) {
    return prodPos[pg.vertexOf(c1, x)] < prodPos[pg.vertexOf(c1, y)];
  });

  const int s = static_cast<int>(layout.pages.size());
  SimultaneousLayout sim;
  sim.order = sigma1;
  for (const auto& page : layout.pages) {
    std::vector<Edge> restricted;
    for (const Edge& e : page) {
      auto [av, x] = pg.factorsOf(e.u);
      auto [au, y] = pg.factorsOf(e.v);
      if (av == c1 && au == c1) restricted.push_back(makeEdge(x, y));
    }
    if (!restricted.empty()) {
      std::sort(restricted.begin(), restricted.end());
      sim.stackPages.push_back(std::move(restricted));
    }
  }

  ExtremalPatterns patterns = extremalPatterns(g, sigma1);
  const long long bound = static_cast<long long>(s) * s;
  if (patterns.maxRainbow.size > bound) {
    // A rainbow above s^2 inside the copy yields, through the inter-copy
    // matching, a twist above s: the input cannot be a valid s-stack layout.
    std::vector<int> sigma1Pos = positionsOf(sigma1, nB);
    std::map<int, int> partnerOf;  // left endpoint -> right endpoint in g
    std::vector<Edge> bridge;
    for (const Edge& e : patterns.maxRainbow.edges) {
      int left = sigma1Pos[e.u] < sigma1Pos[e.v] ? e.u : e.v;
      int right = left == e.u ? e.v : e.u;
      partnerOf[left] = right;
      bridge.push_back(makeEdge(pg.vertexOf(c1, left), pg.vertexOf(c2, left)));
    }
    std::vector<Edge> innerRainbow = rainbowFromSeparatedMatching(bridge, prodPos, s);
    std::vector<Edge> twist;
    for (const Edge& b : innerRainbow) {
      int u = pg.factorsOf(b.u).second;  // both endpoints carry the same g-vertex
      twist.push_back(makeEdge(pg.vertexOf(c1, partnerOf[u]), pg.vertexOf(c2, u)));
    }
    throw TwistWitnessError(
        "copy rainbow of size " + std::to_string(patterns.maxRainbow.size) +
            " exceeds s^2 = " + std::to_string(bound) +
            "; the layout cannot be a valid " + std::to_string(s) + "-stack layout",
        std::move(twist));
  }

  Layout queues = queuesFromOrder(g, sigma1);
  if (static_cast<long long>(queues.pages.size()) > bound) {
    throw std::logic_error("queue count above the rainbow bound");
  }
  sim.queuePages = std::move(queues.pages);
  return {std::move(sim), c1};
}

}  // namespace linlay
