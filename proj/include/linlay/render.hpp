#pragma once

#include <string>

#include "linlay/graph.hpp"
#include "linlay/layout.hpp"

namespace linlay {

struct RenderOptions {
  int spacing = 40;    // horizontal distance between consecutive vertices
  int margin = 40;
  bool labels = true;
  // Render even when the layout fails verification.
  bool force = false;
};

// Arc diagram as an SVG document: vertices on a horizontal line in layout
// order, each page's edges drawn as semicircles in a page color. Stacks go
// above the line; the simultaneous variant mirrors the queue partition
// below. Output is deterministic for identical input. Throws
// std::invalid_argument for an invalid layout unless options.force is set.
std::string renderArcDiagram(const Graph& g, const Layout& layout,
                             const RenderOptions& options = {});
std::string renderArcDiagram(const Graph& g, const SimultaneousLayout& layout,
                             const RenderOptions& options = {});

}  // namespace linlay
