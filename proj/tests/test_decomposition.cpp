#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linlay/constructions.hpp"
#include "linlay/decomposition.hpp"
#include "linlay/graph.hpp"

using namespace linlay;

namespace {

bool bagsContainOwnVertex(const PathDecomposition& pd, const std::vector<int>& order) {
  for (std::size_t x = 0; x < pd.bags.size(); ++x) {
    if (std::find(pd.bags[x].begin(), pd.bags[x].end(), order[x]) == pd.bags[x].end()) {
      return false;
    }
  }
  return true;
}

int maxBagSize(const PathDecomposition& pd) {
  std::size_t best = 0;
  for (const auto& bag : pd.bags) best = std::max(best, bag.size());
  return static_cast<int>(best);
}

}  // namespace

TEST_CASE("path decomposition verification") {
  Graph p3 = pathGraph(3);
  SUBCASE("valid") {
    PathDecomposition pd{{{0, 1}, {1, 2}}};
    auto v = verifyPathDecomposition(p3, pd);
    CHECK(v.valid);
    CHECK(v.width == 1);
  }
  SUBCASE("uncovered edge") {
    PathDecomposition pd{{{0, 1}, {2}}};
    auto v = verifyPathDecomposition(p3, pd);
    CHECK(!v.valid);
    CHECK(v.reason.find("(1, 2)") != std::string::npos);
  }
  SUBCASE("non-contiguous vertex") {
    PathDecomposition pd{{{0, 1}, {1, 2}, {0, 2}}};
    auto v = verifyPathDecomposition(p3, pd);
    CHECK(!v.valid);
    CHECK(v.reason.find("vertex 0") != std::string::npos);
  }
  SUBCASE("vertex in no bag") {
    PathDecomposition pd{{{0, 1}}};
    auto v = verifyPathDecomposition(p3, pd);
    CHECK(!v.valid);
  }
  SUBCASE("foreign vertex throws") {
    PathDecomposition pd{{{0, 7}}};
    CHECK_THROWS_AS(verifyPathDecomposition(p3, pd), std::invalid_argument);
  }
}

TEST_CASE("vertex separation profiles") {
  SUBCASE("paths have cut one") {
    for (int n = 2; n <= 8; ++n) {
      CHECK(vertexSeparation(pathGraph(n), identityOrder(n)).maxCut == 1);
    }
  }
  SUBCASE("complete graphs have cut n-1") {
    for (int n = 2; n <= 6; ++n) {
      CHECK(vertexSeparation(completeGraph(n), identityOrder(n)).maxCut == n - 1);
    }
  }
  SUBCASE("a k-rainbow order has cut at least k") {
    // u1..u4 then v4..v1, edges (u_i, v_i)
    Graph g(8, {{0, 7}, {1, 6}, {2, 5}, {3, 4}});
    CutProfile profile = vertexSeparation(g, identityOrder(8));
    CHECK(profile.maxCut >= 4);
    CHECK(profile.cuts[4] == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("profile matches the definition") {
    Graph g = cycleGraph(4);
    CutProfile profile = vertexSeparation(g, identityOrder(4));
    CHECK(profile.cuts[0].empty());
    CHECK(profile.cuts[1] == std::vector<int>{0});
    CHECK(profile.cuts[2] == std::vector<int>{0, 1});
    CHECK(profile.cuts[3] == std::vector<int>{0, 2});
    CHECK(profile.maxCut == 2);
  }
}

TEST_CASE("width-2 decomposition of paths") {
  for (int n = 1; n <= 9; ++n) {
    Graph g = pathGraph(n);
    PathDecomposition pd = pdFrom11Layout(g, identityOrder(n));
    CHECK(static_cast<int>(pd.bags.size()) == n);
    CHECK(maxBagSize(pd) <= 3);
    CHECK(bagsContainOwnVertex(pd, identityOrder(n)));
    auto v = verifyPathDecomposition(g, pd);
    CHECK(v.valid);
    CHECK(v.width <= 2);
  }
}

TEST_CASE("width-2 decomposition of a star with its center in the middle") {
  // K_{1,4} with the center at position 2; the vertex cut there is
  // unbounded in general but the construction still gives width 2.
  Graph star = starGraph(4);  // center 0, leaves 1..4
  std::vector<int> order{1, 2, 0, 3, 4};
  PathDecomposition pd = pdFrom11Layout(star, order);
  CHECK(pd.bags.size() == 5);
  CHECK(maxBagSize(pd) <= 3);
  CHECK(bagsContainOwnVertex(pd, order));
  auto v = verifyPathDecomposition(star, pd);
  CHECK(v.valid);
  CHECK(v.width <= 2);
}

TEST_CASE("width-2 decomposition of a triangle") {
  Graph k3 = completeGraph(3);
  PathDecomposition pd = pdFrom11Layout(k3, identityOrder(3));
  CHECK(pd.bags.size() == 3);
  CHECK(maxBagSize(pd) <= 3);
  CHECK(bagsContainOwnVertex(pd, identityOrder(3)));
  CHECK(verifyPathDecomposition(k3, pd).valid);
}

TEST_CASE("isolated vertices fall into singleton bags") {
  Graph g(5, {{1, 2}});
  PathDecomposition pd = pdFrom11Layout(g, identityOrder(5));
  CHECK(pd.bags.size() == 5);
  CHECK(verifyPathDecomposition(g, pd).valid);
  CHECK(pd.bags[0] == std::vector<int>{0});
  CHECK(pd.bags[4] == std::vector<int>{4});
}

TEST_CASE("the 1-stack 1-queue hypothesis is enforced") {
  SUBCASE("crossing pair") {
    Graph g(4, {{0, 2}, {1, 3}});
    CHECK_THROWS_AS(pdFrom11Layout(g, identityOrder(4)), SimultaneousOrderError);
    try {
      pdFrom11Layout(g, identityOrder(4));
    } catch (const SimultaneousOrderError& e) {
      CHECK(e.violation.kind == Violation::Kind::Crossing);
      CHECK(*e.violation.first == Edge{0, 2});
      CHECK(*e.violation.second == Edge{1, 3});
    }
  }
  SUBCASE("nested pair") {
    Graph g(4, {{0, 3}, {1, 2}});
    try {
      pdFrom11Layout(g, identityOrder(4));
      FAIL("expected SimultaneousOrderError");
    } catch (const SimultaneousOrderError& e) {
      CHECK(e.violation.kind == Violation::Kind::Nesting);
    }
  }
}

TEST_CASE("exhaustive width-2 check on tiny graphs") {
  // all graphs on up to 5 vertices, all orders
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<int> order = identityOrder(n);
    do {
      std::vector<int> pos = positionsOf(order, n);
      for (int mask = 0; mask < (1 << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
          if (mask & (1 << i)) edges.push_back(slots[i]);
        Graph g(n, edges);
        PathDecomposition pd;
        try {
          pd = pdFrom11Layout(g, order);
        } catch (const SimultaneousOrderError&) {
          continue;
        }
        REQUIRE(static_cast<int>(pd.bags.size()) == n);
        REQUIRE(maxBagSize(pd) <= 3);
        REQUIRE(bagsContainOwnVertex(pd, order));
        REQUIRE(verifyPathDecomposition(g, pd).valid);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("bag-union decomposition reduces to the width-2 case for s = q = 1") {
  Graph p5 = pathGraph(5);
  SimultaneousLayout sim = simultaneousFromOrder(p5, identityOrder(5), 1);
  PathDecomposition pd = pdFromSimultaneous(p5, sim);
  auto v = verifyPathDecomposition(p5, pd);
  CHECK(v.valid);
  CHECK(v.width <= 2);
}

TEST_CASE("bag-union decomposition respects the 2sq bound") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int p = 1 + static_cast<int>(seed % 3);
    auto r = randomPathwidthGraph(p, 10, seed);
    SimultaneousLayout sim = simultaneousFromOrder(r.graph, r.witnessOrder, p);
    int s = static_cast<int>(sim.stackPages.size());
    int q = static_cast<int>(sim.queuePages.size());
    PathDecomposition pd = pdFromSimultaneous(r.graph, sim);
    auto v = verifyPathDecomposition(r.graph, pd);
    CHECK(v.valid);
    CHECK(v.width <= 2 * s * q);
    CHECK(maxBagSize(pd) <= 2 * s * q + 1);
  }
}

TEST_CASE("bag-union decomposition rejects invalid layouts") {
  Graph g(4, {{0, 2}, {1, 3}});
  SimultaneousLayout sim;
  sim.order = identityOrder(4);
  sim.stackPages = {{{0, 2}, {1, 3}}};  // crossing pair in one stack
  sim.queuePages = {{{0, 2}, {1, 3}}};
  CHECK_THROWS_AS(pdFromSimultaneous(g, sim), std::invalid_argument);
}

TEST_CASE("rainbow size never exceeds the vertex cut") {
  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 40) edges.push_back({u, v});
    Graph g(n, edges);
    std::vector<int> order = identityOrder(n);
    std::shuffle(order.begin(), order.end(), rng);
    auto patterns = extremalPatterns(g, order);
    CHECK(patterns.maxRainbow.size <= vertexSeparation(g, order).maxCut);
  }
}
