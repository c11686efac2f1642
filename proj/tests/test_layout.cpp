#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "linlay/graph.hpp"
#include "linlay/layout.hpp"
#include "linlay/product.hpp"

using namespace linlay;

namespace {

enum class Rel { Shared, Disjoint, Nested, Crossing };

Rel relate(const Edge& a, const Edge& b, const std::vector<int>& pos) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return Rel::Shared;
  int al = std::min(pos[a.u], pos[a.v]), ar = std::max(pos[a.u], pos[a.v]);
  int bl = std::min(pos[b.u], pos[b.v]), br = std::max(pos[b.u], pos[b.v]);
  if (bl < al) {
    std::swap(al, bl);
    std::swap(ar, br);
  }
  if (ar < bl) return Rel::Disjoint;
  return br < ar ? Rel::Nested : Rel::Crossing;
}

// Exhaustive pattern oracle: largest subset of edges that is pairwise
// nested (rainbow) or pairwise crossing (twist). Only for small graphs.
int bruteMaxPattern(const Graph& g, const std::vector<int>& order, bool rainbow) {
  std::vector<int> pos = positionsOf(order, g.vertexCount());
  const auto& edges = g.edges();
  const int m = g.edgeCount();
  REQUIRE(m <= 16);
  int best = 0;
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> chosen;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) chosen.push_back(i);
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
        Rel rel = relate(edges[chosen[i]], edges[chosen[j]], pos);
        ok = rel == (rainbow ? Rel::Nested : Rel::Crossing);
      }
    if (ok) best = std::max(best, static_cast<int>(chosen.size()));
  }
  return best;
}

Graph randomGraph(std::mt19937_64& rng, int n, int densityPercent) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < densityPercent) edges.push_back({u, v});
  return Graph(n, edges);
}

std::vector<int> randomOrder(std::mt19937_64& rng, int n) {
  std::vector<int> order = identityOrder(n);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

bool witnessIsRainbow(const PatternWitness& w, const std::vector<int>& pos) {
  for (std::size_t i = 0; i < w.edges.size(); ++i)
    for (std::size_t j = i + 1; j < w.edges.size(); ++j)
      if (relate(w.edges[i], w.edges[j], pos) != Rel::Nested) return false;
  return static_cast<int>(w.edges.size()) == w.size;
}

bool witnessIsTwist(const PatternWitness& w, const std::vector<int>& pos) {
  for (std::size_t i = 0; i < w.edges.size(); ++i)
    for (std::size_t j = i + 1; j < w.edges.size(); ++j)
      if (relate(w.edges[i], w.edges[j], pos) != Rel::Crossing) return false;
  return static_cast<int>(w.edges.size()) == w.size;
}

}  // namespace

TEST_CASE("verifier catches the canonical violations") {
  Graph g(4, {{0, 2}, {1, 3}});
  SUBCASE("crossing in a stack page") {
    Layout l{identityOrder(4), {{{0, 2}, {1, 3}}}, Discipline::Stack};
    auto v = verify(g, l);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::Crossing);
    CHECK(v->page == 0);
    CHECK(*v->first == Edge{0, 2});
    CHECK(*v->second == Edge{1, 3});
  }
  SUBCASE("the same pages are a valid queue") {
    Layout l{identityOrder(4), {{{0, 2}, {1, 3}}}, Discipline::Queue};
    CHECK(!verify(g, l).has_value());
  }
}

TEST_CASE("nesting violates a queue page") {
  Graph g(4, {{0, 3}, {1, 2}});
  Layout l{identityOrder(4), {{{0, 3}, {1, 2}}}, Discipline::Queue};
  auto v = verify(g, l);
  REQUIRE(v.has_value());
  CHECK(v->kind == Violation::Kind::Nesting);
  // a stack accepts the nested pair
  l.discipline = Discipline::Stack;
  CHECK(!verify(g, l).has_value());
}

TEST_CASE("dispersable pages must be matchings") {
  Graph g(3, {{0, 1}, {1, 2}});
  Layout l{identityOrder(3), {{{0, 1}, {1, 2}}}, Discipline::Dispersable};
  auto v = verify(g, l);
  REQUIRE(v.has_value());
  CHECK(v->kind == Violation::Kind::NotMatching);
  // as a plain stack the page is fine
  l.discipline = Discipline::Stack;
  CHECK(!verify(g, l).has_value());
}

TEST_CASE("structural violations are reported distinctly") {
  Graph g(3, {{0, 1}, {1, 2}});
  SUBCASE("missing edge") {
    Layout l{identityOrder(3), {{{0, 1}}}, Discipline::Stack};
    auto v = verify(g, l);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::Structure);
  }
  SUBCASE("unknown edge") {
    Layout l{identityOrder(3), {{{0, 1}, {1, 2}, {0, 2}}}, Discipline::Stack};
    auto v = verify(g, l);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::Structure);
  }
  SUBCASE("duplicated edge") {
    Layout l{identityOrder(3), {{{0, 1}}, {{0, 1}, {1, 2}}}, Discipline::Stack};
    auto v = verify(g, l);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::Structure);
  }
  SUBCASE("bad order") {
    Layout l{{0, 1, 1}, {{{0, 1}, {1, 2}}}, Discipline::Stack};
    auto v = verify(g, l);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::Structure);
  }
}

TEST_CASE("violation reports are deterministic") {
  Graph g(6, {{0, 2}, {0, 4}, {1, 3}, {1, 5}});
  Layout l{identityOrder(6), {{{1, 5}, {0, 2}, {0, 4}, {1, 3}}}, Discipline::Stack};
  auto v1 = verify(g, l);
  auto v2 = verify(g, l);
  REQUIRE(v1.has_value());
  REQUIRE(v2.has_value());
  CHECK(*v1->first == *v2->first);
  CHECK(*v1->second == *v2->second);
  // first pair in lexicographic page order
  CHECK(*v1->first == Edge{0, 2});
  CHECK(*v1->second == Edge{1, 3});
}

TEST_CASE("simultaneous verifier checks both partitions") {
  Graph g(4, {{0, 2}, {1, 3}});
  SimultaneousLayout sim;
  sim.order = identityOrder(4);
  sim.stackPages = {{{0, 2}}, {{1, 3}}};
  sim.queuePages = {{{0, 2}, {1, 3}}};
  CHECK(!verify(g, sim).has_value());

  sim.stackPages = {{{0, 2}, {1, 3}}};
  auto v = verify(g, sim);
  REQUIRE(v.has_value());
  CHECK(v->partition == "stack_pages");
  CHECK(v->kind == Violation::Kind::Crossing);

  sim.stackPages = {{{0, 2}}, {{1, 3}}};
  sim.queuePages = {{{0, 2}}};
  v = verify(g, sim);
  REQUIRE(v.has_value());
  CHECK(v->partition == "queue_pages");
  CHECK(v->kind == Violation::Kind::Structure);
}

TEST_CASE("extremal patterns on the spec triples") {
  Graph nested(6, {{0, 5}, {1, 4}, {2, 3}});
  auto pn = extremalPatterns(nested, identityOrder(6));
  CHECK(pn.maxRainbow.size == 3);
  CHECK(pn.maxTwist.size == 1);

  Graph crossing(6, {{0, 3}, {1, 4}, {2, 5}});
  auto pc = extremalPatterns(crossing, identityOrder(6));
  CHECK(pc.maxTwist.size == 3);
  CHECK(pc.maxRainbow.size == 1);
}

TEST_CASE("K4 patterns match the exhaustive oracle") {
  Graph k4 = completeGraph(4);
  auto p = extremalPatterns(k4, identityOrder(4));
  CHECK(p.maxRainbow.size == bruteMaxPattern(k4, identityOrder(4), true));
  CHECK(p.maxTwist.size == bruteMaxPattern(k4, identityOrder(4), false));
  CHECK(p.maxRainbow.size == 2);
  CHECK(p.maxTwist.size == 2);
}

TEST_CASE("patterns match the exhaustive oracle on random graphs") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 120; ++iter) {
    Graph g = randomGraph(rng, 3 + static_cast<int>(rng() % 5), 45);
    if (g.edgeCount() > 14) continue;
    std::vector<int> order = randomOrder(rng, g.vertexCount());
    std::vector<int> pos = positionsOf(order, g.vertexCount());
    auto p = extremalPatterns(g, order);
    CHECK(p.maxRainbow.size == bruteMaxPattern(g, order, true));
    CHECK(p.maxTwist.size == bruteMaxPattern(g, order, false));
    CHECK(witnessIsRainbow(p.maxRainbow, pos));
    CHECK(witnessIsTwist(p.maxTwist, pos));
  }
}

TEST_CASE("queue assignment realizes the rainbow bound") {
  SUBCASE("path needs one queue") {
    Layout l = queuesFromOrder(pathGraph(5), identityOrder(5));
    CHECK(l.pages.size() == 1);
    CHECK(!verify(pathGraph(5), l).has_value());
  }
  SUBCASE("a k-rainbow needs k queues") {
    Graph rainbow(8, {{0, 7}, {1, 6}, {2, 5}, {3, 4}});
    Layout l = queuesFromOrder(rainbow, identityOrder(8));
    CHECK(l.pages.size() == 4);
    CHECK(!verify(rainbow, l).has_value());
  }
  SUBCASE("K4 in natural order needs two queues") {
    Layout l = queuesFromOrder(completeGraph(4), identityOrder(4));
    CHECK(l.pages.size() == 2);
    CHECK(!verify(completeGraph(4), l).has_value());
  }
}

TEST_CASE("queue page count equals the maximum rainbow on random inputs") {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 150; ++iter) {
    Graph g = randomGraph(rng, 2 + static_cast<int>(rng() % 7), 50);
    std::vector<int> order = randomOrder(rng, g.vertexCount());
    Layout l = queuesFromOrder(g, order);
    CHECK(!verify(g, l).has_value());
    CHECK(static_cast<int>(l.pages.size()) == extremalPatterns(g, order).maxRainbow.size);
  }
}

TEST_CASE("erdos szekeres on the spec examples") {
  {
    auto r = erdosSzekeres({2, 1}, 1, 1);
    CHECK(!r.increasing);
    CHECK(r.values == std::vector<long long>{2, 1});
  }
  {
    auto r = erdosSzekeres({2, 1, 4, 3, 5}, 2, 2);
    CHECK(r.increasing);
    CHECK(r.values == std::vector<long long>{2, 4, 5});  // longest, earliest
  }
  {
    std::vector<long long> ascending{1, 2, 3, 4, 5, 6, 7};
    auto r = erdosSzekeres(ascending, 2, 3);
    CHECK(r.increasing);
    CHECK(static_cast<int>(r.values.size()) >= 3);
  }
  CHECK_THROWS_AS(erdosSzekeres({1, 2}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(erdosSzekeres({1, 1, 2, 3, 4}, 2, 2), std::invalid_argument);
}

TEST_CASE("erdos szekeres always finds a qualifying subsequence") {
  std::mt19937_64 rng(53);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int iter = 0; iter < 200; ++iter) {
        std::vector<long long> seq(a * b + 1);
        for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = static_cast<long long>(i);
        std::shuffle(seq.begin(), seq.end(), rng);
        auto r = erdosSzekeres(seq, a, b);
        if (r.increasing) {
          CHECK(static_cast<int>(r.values.size()) >= a + 1);
        } else {
          CHECK(static_cast<int>(r.values.size()) >= b + 1);
        }
        for (std::size_t i = 0; i + 1 < r.values.size(); ++i) {
          CHECK((r.increasing ? r.values[i] < r.values[i + 1]
                              : r.values[i] > r.values[i + 1]));
        }
        for (std::size_t i = 0; i + 1 < r.indices.size(); ++i) {
          CHECK(r.indices[i] < r.indices[i + 1]);
        }
      }
    }
  }
}

TEST_CASE("density lower bound") {
  CHECK(densityLowerBound(completeGraph(5)) == 3);
  CHECK(densityLowerBound(completeGraph(4)) == 2);
  CHECK(densityLowerBound(pathGraph(5)) == 1);
  CHECK(densityLowerBound(Graph(5, {})) == 0);
  CHECK_THROWS_AS(densityLowerBound(completeGraph(3)), std::invalid_argument);
}

TEST_CASE("separation predicate") {
  ProductGraph pg = product(pathGraph(2), pathGraph(3), ProductKind::Strong);
  Layout block{identityOrder(6), {pg.graph().edges()}, Discipline::Stack};
  auto sep = isSeparated(pg, block);
  CHECK(sep.separated);
  REQUIRE(sep.copies.has_value());
  CHECK(*sep.copies == std::pair(0, 1));

  // reversed copies still count, with the earlier copy reported first
  Layout swapped{{3, 4, 5, 0, 1, 2}, {pg.graph().edges()}, Discipline::Stack};
  sep = isSeparated(pg, swapped);
  CHECK(sep.separated);
  CHECK(*sep.copies == std::pair(1, 0));

  // interleaved copies
  Layout shuffled{{0, 3, 1, 4, 2, 5}, {pg.graph().edges()}, Discipline::Stack};
  sep = isSeparated(pg, shuffled);
  CHECK(!sep.separated);
  REQUIRE(sep.interleavedPair.has_value());
  auto [x, y] = *sep.interleavedPair;
  CHECK(pg.factorsOf(x).first == 0);
  CHECK(pg.factorsOf(y).first == 1);
  std::vector<int> pos = positionsOf(shuffled.order, 6);
  CHECK(pos[y] < pos[x]);

  // factor A must be a path
  ProductGraph bad = product(cycleGraph(3), pathGraph(2), ProductKind::Strong);
  Layout anyOrder{identityOrder(6), {bad.graph().edges()}, Discipline::Stack};
  CHECK_THROWS_AS(isSeparated(bad, anyOrder), std::invalid_argument);
}

TEST_CASE("longest monotone subsequence helper") {
  auto inc = longestMonotoneSubsequence({5, 1, 4, 2, 3}, true);
  CHECK(inc.values == std::vector<long long>{1, 2, 3});
  auto dec = longestMonotoneSubsequence({5, 1, 4, 2, 3}, false);
  CHECK(dec.values == std::vector<long long>{5, 4, 2});
}

TEST_CASE("lexicographically least witnesses") {
  // several maximum rainbows; ties break towards the least (l, r) sequence
  Graph g(8, {{0, 7}, {1, 6}, {2, 5}, {1, 4}, {2, 3}});
  auto p = extremalPatterns(g, identityOrder(8));
  CHECK(p.maxRainbow.size == 3);
  REQUIRE(p.maxRainbow.edges.size() == 3);
  CHECK(p.maxRainbow.edges[0] == Edge{0, 7});
  CHECK(p.maxRainbow.edges[1] == Edge{1, 4});
  CHECK(p.maxRainbow.edges[2] == Edge{2, 3});
}
