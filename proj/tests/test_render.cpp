#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "linlay/constructions.hpp"
#include "linlay/render.hpp"

using namespace linlay;

namespace {

int countOccurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

std::set<std::string> strokeColors(const std::string& svg) {
  std::set<std::string> colors;
  const std::string key = "stroke=\"";
  for (std::size_t at = svg.find(key); at != std::string::npos;
       at = svg.find(key, at + key.size())) {
    std::size_t start = at + key.size();
    colors.insert(svg.substr(start, svg.find('"', start) - start));
  }
  return colors;
}

}  // namespace

TEST_CASE("path layout renders points and arcs") {
  Graph p5 = pathGraph(5);
  Layout l{identityOrder(5), {p5.edges()}, Discipline::Stack};
  std::string svg = renderArcDiagram(p5, l);
  CHECK(countOccurrences(svg, "<circle") == 5);
  CHECK(countOccurrences(svg, "<path") == 4);
  CHECK(strokeColors(svg).size() == 1);
  CHECK(svg.find("<svg") == 0);
}

TEST_CASE("grid layout renders 55 arcs in four colors") {
  auto r = grid4Stack(4, 5);
  std::string svg = renderArcDiagram(r.product.graph(), r.layout);
  CHECK(countOccurrences(svg, "<circle") == 20);
  CHECK(countOccurrences(svg, "<path") == 55);
  CHECK(strokeColors(svg).size() == 4);
}

TEST_CASE("simultaneous layouts draw stacks above and queues below") {
  SimultaneousLayout sim = simultaneousFromOrder(cycleGraph(4), identityOrder(4), 2);
  std::string svg = renderArcDiagram(cycleGraph(4), sim);
  // sweep flag 1 = above the line, 0 = below
  CHECK(countOccurrences(svg, " 0 0 1 ") == 4);
  CHECK(countOccurrences(svg, " 0 0 0 ") == 4);
}

TEST_CASE("invalid layouts are refused unless forced") {
  Graph g(4, {{0, 2}, {1, 3}});
  Layout bad{identityOrder(4), {{{0, 2}, {1, 3}}}, Discipline::Stack};
  CHECK_THROWS_AS(renderArcDiagram(g, bad), std::invalid_argument);
  RenderOptions force;
  force.force = true;
  CHECK(renderArcDiagram(g, bad, force).find("<svg") == 0);
}

TEST_CASE("rendering is deterministic") {
  auto r = grid4Stack(3, 4);
  CHECK(renderArcDiagram(r.product.graph(), r.layout) ==
        renderArcDiagram(r.product.graph(), r.layout));
}
