#include "linlay/layout.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace linlay {

std::string disciplineName(Discipline d) {
  switch (d) {
    case Discipline::Stack: return "stack";
    case Discipline::Queue: return "queue";
    case Discipline::Dispersable: return "dispersable";
  }
  return "?";
}

Discipline disciplineFromName(const std::string& name) {
  if (name == "stack") return Discipline::Stack;
  if (name == "queue") return Discipline::Queue;
  if (name == "dispersable") return Discipline::Dispersable;
  throw std::invalid_argument("unknown discipline '" + name + "'");
}

std::string violationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Structure: return "structure";
    case Violation::Kind::Crossing: return "crossing";
    case Violation::Kind::Nesting: return "nesting";
    case Violation::Kind::NotMatching: return "not-1-regular";
  }
  return "?";
}

namespace {

enum class PairPattern { Shared, Disjoint, Nested, Crossing };

PairPattern classifyPair(const Edge& a, const Edge& b, const std::vector<int>& pos) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return PairPattern::Shared;
  int al = std::min(pos[a.u], pos[a.v]);
  int ar = std::max(pos[a.u], pos[a.v]);
  int bl = std::min(pos[b.u], pos[b.v]);
  int br = std::max(pos[b.u], pos[b.v]);
  if (bl < al) {
    std::swap(al, bl);
    std::swap(ar, br);
  }
  if (ar < bl) return PairPattern::Disjoint;
  if (br < ar) return PairPattern::Nested;
  return PairPattern::Crossing;
}

std::string edgeText(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

Violation structural(const std::string& partition, int page, std::optional<Edge> first,
                     std::optional<Edge> second, std::string reason) {
  Violation v;
  v.kind = Violation::Kind::Structure;
  v.partition = partition;
  v.page = page;
  v.first = first;
  v.second = second;
  v.reason = std::move(reason);
  return v;
}

// Structural checks shared by all disciplines: pages must reference edges of
// g, assign each exactly once, and cover E(g).
std::optional<Violation> checkPartition(const Graph& g,
                                        const std::vector<std::vector<Edge>>& pages,
                                        const std::string& partition) {
  std::vector<int> seenInPage(g.edgeCount(), -1);
  for (int p = 0; p < static_cast<int>(pages.size()); ++p) {
    std::vector<Edge> sorted = pages[p];
    std::sort(sorted.begin(), sorted.end());
    for (const Edge& e : sorted) {
      if (e.u == e.v || e.u > e.v) {
        return structural(partition, p, e, std::nullopt,
                          "edge " + edgeText(e) + " is not a normalized edge");
      }
      int idx = g.edgeIndex(e.u, e.v);
      if (idx < 0) {
        return structural(partition, p, e, std::nullopt,
                          "edge " + edgeText(e) + " is not an edge of the graph");
      }
      if (seenInPage[idx] >= 0) {
        return structural(partition, p, e, std::nullopt,
                          "edge " + edgeText(e) + " already assigned to page " +
                              std::to_string(seenInPage[idx]));
      }
      seenInPage[idx] = p;
    }
  }
  for (int i = 0; i < g.edgeCount(); ++i) {
    if (seenInPage[i] < 0) {
      return structural(partition, -1, g.edges()[i], std::nullopt,
                        "edge " + edgeText(g.edges()[i]) + " is not assigned to any page");
    }
  }
  return std::nullopt;
}

// First discipline violation in scan order: pages ascending, edge pairs in
// lexicographic order. forbidCross/forbidNest select the discipline;
// requireMatching additionally rejects shared endpoints inside a page.
std::optional<Violation> checkDiscipline(const std::vector<std::vector<Edge>>& pages,
                                         const std::vector<int>& pos, bool forbidCross,
                                         bool forbidNest, bool requireMatching,
                                         const std::string& partition) {
  for (int p = 0; p < static_cast<int>(pages.size()); ++p) {
    std::vector<Edge> sorted = pages[p];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        PairPattern pattern = classifyPair(sorted[i], sorted[j], pos);
        Violation v;
        v.partition = partition;
        v.page = p;
        v.first = sorted[i];
        v.second = sorted[j];
        if (pattern == PairPattern::Shared && requireMatching) {
          v.kind = Violation::Kind::NotMatching;
          v.reason = "edges " + edgeText(sorted[i]) + " and " + edgeText(sorted[j]) +
                     " share an endpoint in a dispersable page";
          return v;
        }
        if (pattern == PairPattern::Crossing && forbidCross) {
          v.kind = Violation::Kind::Crossing;
          v.reason = "edges " + edgeText(sorted[i]) + " and " + edgeText(sorted[j]) +
                     " cross in page " + std::to_string(p);
          return v;
        }
        if (pattern == PairPattern::Nested && forbidNest) {
          v.kind = Violation::Kind::Nesting;
          v.reason = "edges " + edgeText(sorted[i]) + " and " + edgeText(sorted[j]) +
                     " nest in page " + std::to_string(p);
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> tryPositions(const Graph& g, const std::vector<int>& order) {
  try {
    return positionsOf(order, g.vertexCount());
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Violation> verify(const Graph& g, const Layout& layout) {
  auto pos = tryPositions(g, layout.order);
  if (!pos) {
    return structural("pages", -1, std::nullopt, std::nullopt,
                      "order is not a permutation of the graph's vertices");
  }
  if (auto v = checkPartition(g, layout.pages, "pages")) return v;
  bool forbidCross = layout.discipline != Discipline::Queue;
  bool forbidNest = layout.discipline == Discipline::Queue;
  bool matching = layout.discipline == Discipline::Dispersable;
  return checkDiscipline(layout.pages, *pos, forbidCross, forbidNest, matching, "pages");
}

std::optional<Violation> verify(const Graph& g, const SimultaneousLayout& layout) {
  auto pos = tryPositions(g, layout.order);
  if (!pos) {
    return structural("order", -1, std::nullopt, std::nullopt,
                      "order is not a permutation of the graph's vertices");
  }
  if (auto v = checkPartition(g, layout.stackPages, "stack_pages")) return v;
  if (auto v = checkPartition(g, layout.queuePages, "queue_pages")) return v;
  if (auto v = checkDiscipline(layout.stackPages, *pos, true, false, false, "stack_pages")) {
    return v;
  }
  return checkDiscipline(layout.queuePages, *pos, false, true, false, "queue_pages");
}

namespace {

struct Interval {
  int l = 0;
  int r = 0;
  Edge edge;
};

std::vector<Interval> intervalsFor(const Graph& g, const std::vector<int>& pos) {
  std::vector<Interval> items;
  items.reserve(g.edgeCount());
  for (const Edge& e : g.edges()) {
    int l = std::min(pos[e.u], pos[e.v]);
    int r = std::max(pos[e.u], pos[e.v]);
    items.push_back({l, r, e});
  }
  return items;
}

bool strictlyInside(const Interval& inner, const Interval& outer) {
  return outer.l < inner.l && inner.r < outer.r;
}

// Longest chain in the strict-containment order, listed outermost first.
// Among maximum chains the lexicographically least sequence of (l, r) pairs
// is chosen.
PatternWitness maxRainbowWitness(std::vector<Interval> items) {
  PatternWitness witness;
  if (items.empty()) return witness;
  // Ascending span: anything strictly inside has a smaller span.
  std::sort(items.begin(), items.end(), [](const Interval& a, const Interval& b) {
    if (a.r - a.l != b.r - b.l) return a.r - a.l < b.r - b.l;
    return std::pair(a.l, a.r) < std::pair(b.l, b.r);
  });
  const int m = static_cast<int>(items.size());
  std::vector<int> down(m, 1);  // longest chain with item i outermost
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      if (strictlyInside(items[j], items[i])) down[i] = std::max(down[i], down[j] + 1);
    }
  }
  int best = *std::max_element(down.begin(), down.end());
  witness.size = best;

  auto lexLess = [](const Interval& a, const Interval& b) {
    return std::pair(a.l, a.r) < std::pair(b.l, b.r);
  };
  int prev = -1;
  for (int remaining = best; remaining >= 1; --remaining) {
    int chosen = -1;
    for (int i = 0; i < m; ++i) {
      if (down[i] < remaining) continue;
      if (prev >= 0 && !strictlyInside(items[i], items[prev])) continue;
      if (chosen < 0 || lexLess(items[i], items[chosen])) chosen = i;
    }
    witness.edges.push_back(items[chosen].edge);
    prev = chosen;
  }
  return witness;
}

// Longest set of pairwise-crossing edges. A twist has all left endpoints
// before all right endpoints, so it is found per "gap" between consecutive
// positions as a strictly increasing chain in (l, r) among the edges that
// span the gap.
PatternWitness maxTwistWitness(const std::vector<Interval>& items, int n) {
  PatternWitness witness;
  if (items.empty()) return witness;

  std::vector<std::pair<int, int>> bestSeq;
  for (int gap = 0; gap + 1 < n; ++gap) {
    std::vector<Interval> span;
    for (const Interval& it : items) {
      if (it.l <= gap && gap < it.r) span.push_back(it);
    }
    if (span.empty()) continue;
    std::sort(span.begin(), span.end(), [](const Interval& a, const Interval& b) {
      return std::pair(a.l, a.r) < std::pair(b.l, b.r);
    });
    const int k = static_cast<int>(span.size());
    std::vector<int> tail(k, 1);  // longest strict (l, r)-chain starting at i
    for (int i = k - 1; i >= 0; --i) {
      for (int j = i + 1; j < k; ++j) {
        if (span[j].l > span[i].l && span[j].r > span[i].r) {
          tail[i] = std::max(tail[i], tail[j] + 1);
        }
      }
    }
    int localBest = *std::max_element(tail.begin(), tail.end());
    if (localBest < witness.size) continue;

    std::vector<std::pair<int, int>> seq;
    std::vector<Edge> edges;
    int prevL = -1, prevR = -1;
    for (int remaining = localBest; remaining >= 1; --remaining) {
      int chosen = -1;
      for (int i = 0; i < k; ++i) {
        if (tail[i] < remaining) continue;
        if (span[i].l <= prevL || span[i].r <= prevR) continue;
        if (chosen < 0 ||
            std::pair(span[i].l, span[i].r) < std::pair(span[chosen].l, span[chosen].r)) {
          chosen = i;
        }
      }
      seq.push_back({span[chosen].l, span[chosen].r});
      edges.push_back(span[chosen].edge);
      prevL = span[chosen].l;
      prevR = span[chosen].r;
    }
    if (localBest > witness.size || seq < bestSeq || bestSeq.empty()) {
      witness.size = localBest;
      witness.edges = edges;
      bestSeq = seq;
    }
  }
  return witness;
}

}  // namespace

ExtremalPatterns extremalPatterns(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos = positionsOf(order, g.vertexCount());
  std::vector<Interval> items = intervalsFor(g, pos);
  ExtremalPatterns result;
  result.maxRainbow = maxRainbowWitness(items);
  result.maxTwist = maxTwistWitness(items, g.vertexCount());
  return result;
}

Layout queuesFromOrder(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos = positionsOf(order, g.vertexCount());
  std::vector<Interval> items = intervalsFor(g, pos);
  const int m = static_cast<int>(items.size());
  // Descending span: anything strictly containing an item comes earlier.
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return items[a].r - items[a].l > items[b].r - items[b].l;
  });
  std::vector<int> depth(m, 1);
  int pageCount = 0;
  for (int a = 0; a < m; ++a) {
    int i = idx[a];
    for (int b = 0; b < a; ++b) {
      int j = idx[b];
      if (strictlyInside(items[i], items[j])) depth[i] = std::max(depth[i], depth[j] + 1);
    }
    pageCount = std::max(pageCount, depth[i]);
  }
  Layout layout;
  layout.order = order;
  layout.discipline = Discipline::Queue;
  layout.pages.assign(pageCount, {});
  for (int i = 0; i < m; ++i) layout.pages[depth[i] - 1].push_back(items[i].edge);
  for (auto& page : layout.pages) std::sort(page.begin(), page.end());
  return layout;
}

namespace {

// Longest strictly monotone subsequence; earliest witness in index order.
std::pair<int, std::vector<int>> longestMonotone(const std::vector<long long>& seq,
                                                 bool increasing) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> len(n, 1), parent(n, -1);
  int bestLen = 0, bestEnd = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      bool ok = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
      if (ok && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        parent[i] = j;
      }
    }
    if (len[i] > bestLen) {
      bestLen = len[i];
      bestEnd = i;
    }
  }
  std::vector<int> indices;
  for (int cur = bestEnd; cur >= 0; cur = parent[cur]) indices.push_back(cur);
  std::reverse(indices.begin(), indices.end());
  return {bestLen, indices};
}

}  // namespace

MonotoneSubsequence longestMonotoneSubsequence(const std::vector<long long>& seq,
                                               bool increasing) {
  auto [len, indices] = longestMonotone(seq, increasing);
  MonotoneSubsequence result;
  result.increasing = increasing;
  result.indices = std::move(indices);
  for (int i : result.indices) result.values.push_back(seq[i]);
  return result;
}

MonotoneSubsequence erdosSzekeres(const std::vector<long long>& seq, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("a and b must be non-negative");
  const long long need = static_cast<long long>(a) * b + 1;
  if (static_cast<long long>(seq.size()) < need) {
    throw std::invalid_argument("sequence of length " + std::to_string(seq.size()) +
                                " is shorter than a*b+1 = " + std::to_string(need));
  }
  std::vector<long long> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("sequence entries must be distinct");
  }
  auto [incLen, incIdx] = longestMonotone(seq, true);
  auto [decLen, decIdx] = longestMonotone(seq, false);
  bool incQualifies = incLen >= a + 1;
  bool decQualifies = decLen >= b + 1;
  bool useIncreasing;
  if (incQualifies && decQualifies) {
    useIncreasing = incLen >= decLen;
  } else if (incQualifies) {
    useIncreasing = true;
  } else if (decQualifies) {
    useIncreasing = false;
  } else {
    throw std::logic_error("no qualifying monotone subsequence despite length a*b+1");
  }
  MonotoneSubsequence result;
  result.increasing = useIncreasing;
  result.indices = useIncreasing ? incIdx : decIdx;
  for (int i : result.indices) result.values.push_back(seq[i]);
  return result;
}

int densityLowerBound(const Graph& g) {
  const int n = g.vertexCount();
  if (n < 4) throw std::invalid_argument("density bound needs n >= 4");
  const long long m = g.edgeCount();
  const long long num = m - n;
  const long long den = n - 3;
  long long bound = num >= 0 ? (num + den - 1) / den : -((-num) / den);
  if (m >= 1) bound = std::max(bound, 1LL);
  return static_cast<int>(std::max(bound, 0LL));
}

SeparationResult isSeparated(const ProductGraph& pg, const Layout& layout) {
  const Graph& path = pg.factorA();
  const int copies = path.vertexCount();
  if (path.edgeCount() != copies - 1) {
    throw std::invalid_argument("factor A is not a path in natural form");
  }
  for (int i = 0; i + 1 < copies; ++i) {
    if (!path.hasEdge(i, i + 1)) {
      throw std::invalid_argument("factor A is not a path in natural form");
    }
  }
  std::vector<int> pos = positionsOf(layout.order, pg.graph().vertexCount());
  const int nB = pg.factorB().vertexCount();
  std::vector<int> minPos(copies), maxPos(copies);
  for (int c = 0; c < copies; ++c) {
    int lo = pg.graph().vertexCount(), hi = -1;
    for (int x = 0; x < nB; ++x) {
      int p = pos[pg.vertexOf(c, x)];
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    minPos[c] = lo;
    maxPos[c] = hi;
  }
  SeparationResult result;
  for (int c = 0; c + 1 < copies; ++c) {
    if (maxPos[c] < minPos[c + 1]) {
      result.separated = true;
      result.copies = {c, c + 1};
      return result;
    }
    if (maxPos[c + 1] < minPos[c]) {
      result.separated = true;
      result.copies = {c + 1, c};
      return result;
    }
  }
  if (copies >= 2) {
    // Copies 0 and 1 interleave in both directions; report the least pair
    // (x, y) with x in copy 0, y in copy 1, and y placed before x.
    for (int x = 0; x < nB && !result.interleavedPair; ++x) {
      for (int y = 0; y < nB; ++y) {
        if (pos[pg.vertexOf(1, y)] < pos[pg.vertexOf(0, x)]) {
          result.interleavedPair = {pg.vertexOf(0, x), pg.vertexOf(1, y)};
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace linlay
