#include "linlay/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace linlay {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
                          "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a"};
constexpr int kPaletteSize = 12;

std::string num(double x) {
  // One decimal is enough for half-integer arc centers and keeps the
  // output byte-stable.
  long long tenths = static_cast<long long>(x * 10 + (x >= 0 ? 0.5 : -0.5));
  std::ostringstream out;
  out << tenths / 10;
  if (tenths % 10 != 0) out << "." << std::abs(tenths % 10);
  return out.str();
}

struct Canvas {
  std::ostringstream body;
  int maxAbove = 0;
  int maxBelow = 0;
};

void drawPages(Canvas& canvas, const std::vector<std::vector<Edge>>& pages,
               const std::vector<int>& pos, bool above, int spacing, int colorOffset) {
  for (int p = 0; p < static_cast<int>(pages.size()); ++p) {
    const char* color = kPalette[(colorOffset + p) % kPaletteSize];
    std::vector<Edge> sorted = pages[p];
    std::sort(sorted.begin(), sorted.end());
    for (const Edge& e : sorted) {
      int l = std::min(pos[e.u], pos[e.v]);
      int r = std::max(pos[e.u], pos[e.v]);
      double x1 = l * spacing;
      double x2 = r * spacing;
      double radius = (x2 - x1) / 2.0;
      int rise = static_cast<int>(radius + 1);
      (above ? canvas.maxAbove : canvas.maxBelow) =
          std::max(above ? canvas.maxAbove : canvas.maxBelow, rise);
      canvas.body << "  <path d=\"M " << num(x1) << " 0 A " << num(radius) << " "
                  << num(radius) << " 0 0 " << (above ? 1 : 0) << " " << num(x2)
                  << " 0\" fill=\"none\" stroke=\"" << color
                  << "\" stroke-width=\"1.5\"/>\n";
    }
  }
}

std::string finish(const Canvas& canvas, int n, const RenderOptions& options) {
  const int width = 2 * options.margin + (n > 1 ? (n - 1) * options.spacing : 0);
  const int top = options.margin + canvas.maxAbove;
  const int height = top + canvas.maxBelow + options.margin + (options.labels ? 14 : 0);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<g transform=\"translate(" << options.margin << " " << top << ")\">\n";
  out << canvas.body.str();
  out << "</g>\n</svg>\n";
  return out.str();
}

void drawVertices(Canvas& canvas, const std::vector<int>& order, const RenderOptions& options) {
  const int labelY = canvas.maxBelow + 14;  // clear of any queue arcs
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    double x = i * options.spacing;
    canvas.body << "  <circle cx=\"" << num(x) << "\" cy=\"0\" r=\"3\" fill=\"black\"/>\n";
    if (options.labels) {
      canvas.body << "  <text x=\"" << num(x) << "\" y=\"" << labelY
                  << "\" font-size=\"10\" font-family=\"sans-serif\" "
                  << "text-anchor=\"middle\">" << order[i] << "</text>\n";
    }
  }
}

}  // namespace

std::string renderArcDiagram(const Graph& g, const Layout& layout,
                             const RenderOptions& options) {
  if (!options.force) {
    if (auto violation = verify(g, layout)) {
      throw std::invalid_argument("refusing to render an invalid layout: " +
                                  violation->reason);
    }
  }
  std::vector<int> pos = positionsOf(layout.order, g.vertexCount());
  Canvas canvas;
  drawPages(canvas, layout.pages, pos, true, options.spacing, 0);
  drawVertices(canvas, layout.order, options);
  return finish(canvas, g.vertexCount(), options);
}

std::string renderArcDiagram(const Graph& g, const SimultaneousLayout& layout,
                             const RenderOptions& options) {
  if (!options.force) {
    if (auto violation = verify(g, layout)) {
      throw std::invalid_argument("refusing to render an invalid layout: " +
                                  violation->reason);
    }
  }
  std::vector<int> pos = positionsOf(layout.order, g.vertexCount());
  Canvas canvas;
  drawPages(canvas, layout.stackPages, pos, true, options.spacing, 0);
  drawPages(canvas, layout.queuePages, pos, false, options.spacing,
            static_cast<int>(layout.stackPages.size()));
  drawVertices(canvas, layout.order, options);
  return finish(canvas, g.vertexCount(), options);
}

}  // namespace linlay
