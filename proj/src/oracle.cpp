#include "linlay/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>

namespace linlay {

GraphInvariant invariantFromName(const std::string& name) {
  if (name == "stack_number") return GraphInvariant::StackNumber;
  if (name == "queue_number") return GraphInvariant::QueueNumber;
  if (name == "dispersable_number") return GraphInvariant::DispersableNumber;
  if (name == "pathwidth") return GraphInvariant::Pathwidth;
  throw std::invalid_argument("unknown invariant '" + name + "'");
}

std::string invariantName(GraphInvariant which) {
  switch (which) {
    case GraphInvariant::StackNumber: return "stack_number";
    case GraphInvariant::QueueNumber: return "queue_number";
    case GraphInvariant::DispersableNumber: return "dispersable_number";
    case GraphInvariant::Pathwidth: return "pathwidth";
  }
  return "?";
}

namespace {

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds limit)
      : end_(std::chrono::steady_clock::now() + limit) {}
  void check() const {
    if (++counter_ % 1024 != 0) return;
    if (std::chrono::steady_clock::now() > end_) {
      throw BudgetExceeded("time budget exceeded");
    }
  }

 private:
  std::chrono::steady_clock::time_point end_;
  mutable std::uint64_t counter_ = 0;
};

struct Item {
  int l = 0;
  int r = 0;
  Edge edge;
};

std::vector<Item> itemsForOrder(const Graph& g, const std::vector<int>& pos) {
  std::vector<Item> items;
  items.reserve(g.edgeCount());
  for (const Edge& e : g.edges()) {
    items.push_back({std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v]), e});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::pair(a.l, a.r) < std::pair(b.l, b.r);
  });
  return items;
}

bool edgesCross(const Item& a, const Item& b) {
  const Item& lo = a.l <= b.l ? a : b;
  const Item& hi = a.l <= b.l ? b : a;
  return lo.l < hi.l && hi.l < lo.r && lo.r < hi.r;
}

bool shareEndpoint(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

// conflicts[i] has bit j set when edges i and j may not share a page.
std::vector<std::uint64_t> conflictMasks(const std::vector<Item>& items, bool matchingPages) {
  const int m = static_cast<int>(items.size());
  std::vector<std::uint64_t> conflicts(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool conflict;
      if (shareEndpoint(items[i].edge, items[j].edge)) {
        conflict = matchingPages;
      } else {
        conflict = edgesCross(items[i], items[j]);
      }
      if (conflict) {
        conflicts[i] |= std::uint64_t{1} << j;
        conflicts[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return conflicts;
}

// First-fit backtracking over edges in left-endpoint order; a new color may
// only open the next unused index, which prunes color permutations.
bool colorWithin(const std::vector<std::uint64_t>& conflicts, int k, const Deadline& deadline,
                 std::vector<int>& colors) {
  const int m = static_cast<int>(conflicts.size());
  colors.assign(m, -1);
  if (k <= 0) return m == 0;
  std::function<bool(int, int)> assign = [&](int i, int used) {
    if (i == m) return true;
    deadline.check();
    std::uint64_t banned = 0;
    std::uint64_t mask = conflicts[i];
    while (mask) {
      int j = std::countr_zero(mask);
      mask &= mask - 1;
      if (colors[j] >= 0) banned |= std::uint64_t{1} << colors[j];
    }
    int limit = std::min(used, k - 1);
    for (int c = 0; c <= limit; ++c) {
      if (banned & (std::uint64_t{1} << c)) continue;
      colors[i] = c;
      if (assign(i + 1, std::max(used, c + 1))) return true;
      colors[i] = -1;
    }
    return false;
  };
  return assign(0, 0);
}

Layout layoutFromColors(const std::vector<Item>& items, const std::vector<int>& colors,
                        int pageCount, const std::vector<int>& order, Discipline discipline) {
  Layout layout;
  layout.order = order;
  layout.discipline = discipline;
  layout.pages.assign(pageCount, {});
  for (std::size_t i = 0; i < items.size(); ++i) layout.pages[colors[i]].push_back(items[i].edge);
  for (auto& page : layout.pages) std::sort(page.begin(), page.end());
  return layout;
}

int maxRainbowSize(const std::vector<Item>& items) {
  const int m = static_cast<int>(items.size());
  // Items are sorted by (l, r); a strict container has a smaller l.
  std::vector<int> depth(m, 1);
  int best = m > 0 ? 1 : 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      if (items[j].l < items[i].l && items[i].r < items[j].r) {
        depth[i] = std::max(depth[i], depth[j] + 1);
      }
    }
    best = std::max(best, depth[i]);
  }
  return best;
}

int maxCutSize(const Graph& g, const std::vector<int>& order, const std::vector<int>& pos) {
  const int n = g.vertexCount();
  std::vector<int> lastNeighborPos(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) lastNeighborPos[v] = std::max(lastNeighborPos[v], pos[w]);
  }
  // Sweep positions, tracking how many earlier vertices still reach forward.
  int best = 0;
  for (int i = 0; i < n; ++i) {
    int cut = 0;
    for (int j = 0; j < i; ++j) {
      if (lastNeighborPos[order[j]] >= i) ++cut;
    }
    best = std::max(best, cut);
  }
  return best;
}

bool reversedIsLexSmaller(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i) {
    int fwd = perm[i];
    int rev = perm[n - 1 - i];
    if (rev != fwd) return rev < fwd;
  }
  return false;
}

void checkBudget(const Graph& g, const OracleBudget& budget, bool needsMasks) {
  if (g.vertexCount() > budget.maxVertices) {
    throw BudgetExceeded("graph has " + std::to_string(g.vertexCount()) +
                         " vertices, budget allows " + std::to_string(budget.maxVertices));
  }
  if (g.edgeCount() > budget.maxEdges) {
    throw BudgetExceeded("graph has " + std::to_string(g.edgeCount()) +
                         " edges, budget allows " + std::to_string(budget.maxEdges));
  }
  if (needsMasks && g.edgeCount() > 64) {
    throw BudgetExceeded("page-assignment search supports at most 64 edges");
  }
}

int trivialLowerBound(const Graph& g, GraphInvariant which) {
  if (g.edgeCount() == 0) return 0;
  int lb = 1;
  if (which == GraphInvariant::StackNumber || which == GraphInvariant::DispersableNumber) {
    if (g.vertexCount() >= 4) lb = std::max(lb, densityLowerBound(g));
  }
  if (which == GraphInvariant::DispersableNumber) lb = std::max(lb, g.maxDegree());
  return lb;
}

}  // namespace

OracleResult exactInvariant(const Graph& g, GraphInvariant which, const OracleBudget& budget) {
  const bool pageSearch =
      which == GraphInvariant::StackNumber || which == GraphInvariant::DispersableNumber;
  checkBudget(g, budget, pageSearch);
  const int n = g.vertexCount();

  OracleResult result;
  if (n == 0 || g.edgeCount() == 0) {
    result.value = 0;
    result.order = identityOrder(n);
    if (which != GraphInvariant::Pathwidth) {
      result.layout = Layout{identityOrder(n), {},
                             which == GraphInvariant::QueueNumber
                                 ? Discipline::Queue
                                 : (which == GraphInvariant::DispersableNumber
                                        ? Discipline::Dispersable
                                        : Discipline::Stack)};
    }
    return result;
  }

  Deadline deadline(budget.timeLimit);
  const int lowerBound = trivialLowerBound(g, which);
  const bool matchingPages = which == GraphInvariant::DispersableNumber;
  const Discipline discipline = which == GraphInvariant::QueueNumber
                                    ? Discipline::Queue
                                    : (matchingPages ? Discipline::Dispersable
                                                     : Discipline::Stack);

  int best = -1;
  std::vector<int> bestOrder;
  Layout bestLayout;

  std::vector<int> perm = identityOrder(n);
  do {
    deadline.check();
    if (budget.pruneReversal && reversedIsLexSmaller(perm)) continue;
    std::vector<int> pos = positionsOf(perm, n);
    if (which == GraphInvariant::Pathwidth) {
      int cut = maxCutSize(g, perm, pos);
      if (best < 0 || cut < best) {
        best = cut;
        bestOrder = perm;
      }
    } else if (which == GraphInvariant::QueueNumber) {
      int rainbow = maxRainbowSize(itemsForOrder(g, pos));
      if (best < 0 || rainbow < best) {
        best = rainbow;
        bestOrder = perm;
      }
    } else {
      std::vector<Item> items = itemsForOrder(g, pos);
      std::vector<std::uint64_t> conflicts = conflictMasks(items, matchingPages);
      int cap = best < 0 ? g.edgeCount() : best - 1;
      std::vector<int> colors;
      if (cap >= lowerBound && colorWithin(conflicts, cap, deadline, colors)) {
        int used = 1 + *std::max_element(colors.begin(), colors.end());
        // Shrink to this order's true minimum.
        while (used > lowerBound) {
          std::vector<int> tighter;
          if (!colorWithin(conflicts, used - 1, deadline, tighter)) break;
          colors = tighter;
          used = 1 + *std::max_element(colors.begin(), colors.end());
        }
        best = used;
        bestOrder = perm;
        bestLayout = layoutFromColors(items, colors, used, perm, discipline);
      }
    }
    if (best == lowerBound) break;
  } while (std::next_permutation(perm.begin(), perm.end()));

  result.value = best;
  result.order = bestOrder;
  if (which == GraphInvariant::QueueNumber) {
    result.layout = queuesFromOrder(g, bestOrder);
  } else if (pageSearch) {
    result.layout = bestLayout;
  }
  return result;
}

PageMinimum minPagesForOrder(const Graph& g, const std::vector<int>& order,
                             Discipline discipline, const OracleBudget& budget) {
  std::vector<int> pos = positionsOf(order, g.vertexCount());
  if (discipline == Discipline::Queue) {
    Layout layout = queuesFromOrder(g, order);
    return {static_cast<int>(layout.pages.size()), std::move(layout)};
  }
  if (discipline != Discipline::Stack) {
    throw std::invalid_argument("fixed-order minimization handles stack and queue pages");
  }
  checkBudget(g, budget, true);
  Deadline deadline(budget.timeLimit);
  std::vector<Item> items = itemsForOrder(g, pos);
  std::vector<std::uint64_t> conflicts = conflictMasks(items, false);
  if (items.empty()) {
    return {0, Layout{order, {}, Discipline::Stack}};
  }
  // Any k-twist needs k pages, so start from the exact twist size.
  int k = std::max(1, extremalPatterns(g, order).maxTwist.size);
  std::vector<int> colors;
  while (!colorWithin(conflicts, k, deadline, colors)) ++k;
  return {k, layoutFromColors(items, colors, k, order, Discipline::Stack)};
}

}  // namespace linlay
