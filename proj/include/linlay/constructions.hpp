#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "linlay/graph.hpp"
#include "linlay/layout.hpp"
#include "linlay/product.hpp"

namespace linlay {

// Product vertex order: copies of factor B follow the order of factor A's
// layout; inside a copy the B order is used when the copy's A-vertex is
// white and its reverse when black. Consecutive copies therefore mirror
// each other.
std::vector<int> buildProductOrder(const ProductGraph& pg, const std::vector<int>& aOrder,
                                   const Bipartition& aColors,
                                   const std::vector<int>& bOrder);

// A p-stack p-queue layout sharing one order, for an order whose maximum
// vertex cut is at most p. Queues realize the rainbow bound; each vertex's
// whole forward-edge set goes to the lowest stack not used by forward sets
// of vertices still in the next cut. Throws std::invalid_argument when the
// cut exceeds p.
SimultaneousLayout simultaneousFromOrder(const Graph& g, const std::vector<int>& order,
                                         int p);

struct ProductLayoutResult {
  ProductGraph product;
  Layout layout;
};

// Stack layout of product(h, g, kind) from a dispersable layout of a
// bipartite h and a simultaneous layout of g. Page counts stay within
// s + d for the cartesian product, 2*q*d for the direct product and their
// sum for the strong product, where s and q are g's stack and queue counts
// and d is h's dispersable page count.
ProductLayoutResult productStackLayout(const Graph& h, const Layout& hDispersable,
                                       const Graph& g, const SimultaneousLayout& gSim,
                                       ProductKind kind);

// Splits every stack page of a bipartite graph into at most maxDegree
// matchings via proper edge coloring, keeping the vertex order.
Layout dispersableFromStack(const Graph& g, const Layout& stacks);

// The alternating 2-page matching layout of a path (1 page when n = 2).
Layout dispersablePath(int n);

// The 4-stack layout of the strong product of two paths: copies alternate
// direction, within-copy edges share a page with the even copy pairs, and
// the two diagonal families of each copy pair split by parity.
ProductLayoutResult grid4Stack(int n, int m);

// Raised when layout data that was claimed valid contains a twist larger
// than its stack count.
struct TwistWitnessError : std::runtime_error {
  TwistWitnessError(std::string message, std::vector<Edge> witness)
      : std::runtime_error(std::move(message)), twist(std::move(witness)) {}
  std::vector<Edge> twist;
};

// Extractor behind the separated-layout argument: given independent edges
// whose left endpoints all precede every right endpoint, an s-stack layout
// admits a rainbow of at least ceil(k/s) of them. Throws TwistWitnessError
// carrying a twist of size > s when no such rainbow exists (impossible for
// a valid s-stack layout).
std::vector<Edge> rainbowFromSeparatedMatching(const std::vector<Edge>& edges,
                                               const std::vector<int>& pos, int s);

struct SeparatedExtraction {
  SimultaneousLayout sim;  // layout of factor B
  int copy = 0;            // path vertex whose copy supplied the order
};

// From a verified separated stack layout of path x g (strong), extracts a
// simultaneous layout of g on at most s stacks and s^2 queues using the
// suborder of the first separated copy. Throws TwistWitnessError when the
// rainbow bound fails, which certifies the input was not a valid s-stack
// layout.
SeparatedExtraction simultaneousFromSeparated(const ProductGraph& pg, const Layout& layout);

}  // namespace linlay
