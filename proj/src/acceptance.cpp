#include "linlay/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "linlay/constructions.hpp"
#include "linlay/decomposition.hpp"
#include "linlay/graph.hpp"
#include "linlay/json_io.hpp"
#include "linlay/layout.hpp"
#include "linlay/oracle.hpp"
#include "linlay/product.hpp"

namespace linlay::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct GEntry {
  std::string name;
  Graph graph;
  std::vector<int> order;
  int p = 1;
};

struct HEntry {
  std::string name;
  Graph graph;
  Layout disp;
};

struct StrongOutput {
  ProductGraph product;
  Layout layout;
};

class Suite {
 public:
  explicit Suite(std::ostream& out) : out_(out) {}

  std::vector<CriterionResult> run() {
    buildFamilies();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    return results_;
  }

 private:
  std::ostream& out_;
  std::vector<CriterionResult> results_;

  std::vector<GEntry> gFamily_;
  std::vector<HEntry> hFamily_;
  std::vector<SimultaneousLayout> gSims_;   // parallel to gFamily_
  std::vector<StrongOutput> strongOutputs_;
  long long verifiedLayouts_ = 0;

  void report(int id, const std::string& name, bool passed, const std::string& detail,
              double seconds) {
    results_.push_back({id, name, passed, detail, seconds});
    out_ << formatLine(results_.back());
    out_.flush();
  }

  // Verified layout bookkeeping feeds the master property criterion.
  template <typename LayoutType>
  bool checkValid(const Graph& g, const LayoutType& layout, std::string& firstFailure,
                  const std::string& context) {
    auto violation = verify(g, layout);
    ++verifiedLayouts_;
    if (violation) {
      if (firstFailure.empty()) firstFailure = context + ": " + violation->reason;
      return false;
    }
    return true;
  }

  void buildFamilies() {
    gFamily_.push_back({"P5", pathGraph(5), identityOrder(5), 1});
    for (int p = 1; p <= 3; ++p) {
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto r = randomPathwidthGraph(p, 10, seed);
        std::ostringstream name;
        name << "rpw(p=" << p << ",seed=" << seed << ")";
        gFamily_.push_back({name.str(), std::move(r.graph), std::move(r.witnessOrder), p});
      }
    }
    for (const GEntry& g : gFamily_) {
      gSims_.push_back(simultaneousFromOrder(g.graph, g.order, g.p));
    }

    for (int n : {3, 4, 6}) {
      std::ostringstream name;
      name << "P" << n;
      hFamily_.push_back({name.str(), pathGraph(n), dispersablePath(n)});
    }
    Graph c6 = cycleGraph(6);
    Layout c6Stack{identityOrder(6), {c6.edges()}, Discipline::Stack};
    hFamily_.push_back({"C6", c6, dispersableFromStack(c6, c6Stack)});
    Graph star = starGraph(3);
    auto starDisp = exactInvariant(star, GraphInvariant::DispersableNumber);
    hFamily_.push_back({"K13", star, *starDisp.layout});
  }

  void criterion1() {
    auto start = Clock::now();
    std::string failure;
    int instances = 0;
    double worstInstance = 0.0;
    for (const HEntry& h : hFamily_) {
      const int d = static_cast<int>(h.disp.pages.size());
      for (std::size_t gi = 0; gi < gFamily_.size(); ++gi) {
        const GEntry& g = gFamily_[gi];
        const SimultaneousLayout& sim = gSims_[gi];
        const int s = static_cast<int>(sim.stackPages.size());
        const int q = static_cast<int>(sim.queuePages.size());
        for (ProductKind kind :
             {ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong}) {
          auto t0 = Clock::now();
          auto res = productStackLayout(h.graph, h.disp, g.graph, sim, kind);
          int bound = kind == ProductKind::Cartesian
                          ? s + d
                          : (kind == ProductKind::Direct ? 2 * q * d
                                                         : 2 * q * d + s + d);
          checkValid(res.product.graph(), res.layout, failure,
                     h.name + " x " + g.name + " " + productKindName(kind));
          if (static_cast<int>(res.layout.pages.size()) > bound && failure.empty()) {
            failure = h.name + " x " + g.name + " " + productKindName(kind) + ": " +
                      std::to_string(res.layout.pages.size()) + " pages, bound " +
                      std::to_string(bound);
          }
          if (kind == ProductKind::Strong) {
            strongOutputs_.push_back({std::move(res.product), std::move(res.layout)});
          }
          worstInstance = std::max(worstInstance, secondsSince(t0));
          ++instances;
        }
      }
    }
    if (failure.empty() && worstInstance >= 1.0) {
      std::ostringstream detail;
      detail << "slowest instance took " << worstInstance << " s";
      failure = detail.str();
    }
    std::ostringstream detail;
    detail << instances << " products, all valid within the three page bounds, slowest "
           << std::fixed << std::setprecision(3) << worstInstance << " s";
    report(1, "theorem-1 page bounds", failure.empty(),
           failure.empty() ? detail.str() : failure, secondsSince(start));
  }

  void criterion2() {
    auto start = Clock::now();
    std::string failure;
    int instances = 0;
    for (int n = 3; n <= 8 && failure.empty(); ++n) {
      Graph h = pathGraph(n);
      Layout hDisp = dispersablePath(n);
      for (std::size_t gi = 0; gi < gFamily_.size(); ++gi) {
        const GEntry& g = gFamily_[gi];
        auto res = productStackLayout(h, hDisp, g.graph, gSims_[gi], ProductKind::Strong);
        checkValid(res.product.graph(), res.layout, failure,
                   "P" + std::to_string(n) + " x " + g.name);
        if (static_cast<int>(res.layout.pages.size()) > 5 * g.p + 2 && failure.empty()) {
          failure = "P" + std::to_string(n) + " x " + g.name + ": " +
                    std::to_string(res.layout.pages.size()) + " stacks, bound " +
                    std::to_string(5 * g.p + 2);
        }
        strongOutputs_.push_back({std::move(res.product), std::move(res.layout)});
        ++instances;
      }
    }
    std::ostringstream detail;
    detail << instances << " strong products within 5p+2 stacks";
    report(2, "corollary-1 pipeline bound", failure.empty(),
           failure.empty() ? detail.str() : failure, secondsSince(start));
  }

  void criterion3() {
    auto start = Clock::now();
    std::string failure;
    int instances = 0;
    for (int n = 2; n <= 8; ++n) {
      for (int m = 2; m <= 8; ++m) {
        auto res = grid4Stack(n, m);
        checkValid(res.product.graph(), res.layout, failure,
                   "grid " + std::to_string(n) + "x" + std::to_string(m));
        if (res.layout.pages.size() > 4 && failure.empty()) {
          failure = "grid " + std::to_string(n) + "x" + std::to_string(m) + " used " +
                    std::to_string(res.layout.pages.size()) + " pages";
        }
        ++instances;
      }
    }
    double elapsed = secondsSince(start);
    if (failure.empty() && elapsed >= 1.0) {
      failure = "sweep took " + std::to_string(elapsed) + " s";
    }
    std::ostringstream detail;
    detail << instances << " grids on at most 4 stacks";
    report(3, "four-stack grid layouts", failure.empty(),
           failure.empty() ? detail.str() : failure, elapsed);
  }

  void criterion4() {
    auto start = Clock::now();
    std::string failure;
    for (int n = 3; n <= 10 && failure.empty(); ++n) {
      Layout l = dispersablePath(n);
      if (l.pages.size() != 2) {
        failure = "dispersablePath(" + std::to_string(n) + ") has " +
                  std::to_string(l.pages.size()) + " pages";
        break;
      }
      checkValid(pathGraph(n), l, failure, "dispersable path " + std::to_string(n));
    }
    for (int n = 3; n <= 8 && failure.empty(); ++n) {
      auto res = exactInvariant(pathGraph(n), GraphInvariant::DispersableNumber);
      if (res.value != 2) {
        failure = "oracle dsn(P" + std::to_string(n) + ") = " + std::to_string(res.value);
      }
    }
    report(4, "paths have dispersable number two", failure.empty(),
           failure.empty() ? "construction and oracle agree on 2 pages" : failure,
           secondsSince(start));
  }

  void criterion5() {
    auto start = Clock::now();
    std::string failure;
    OracleBudget budget;
    budget.timeLimit = std::chrono::seconds(60);
    auto expect = [&](const Graph& g, GraphInvariant which, int want,
                      const std::string& what) {
      if (!failure.empty()) return;
      try {
        auto res = exactInvariant(g, which, budget);
        if (res.value != want) {
          failure = what + " = " + std::to_string(res.value) + ", expected " +
                    std::to_string(want);
        } else if (res.layout) {
          checkValid(g, *res.layout, failure, what + " witness");
        }
      } catch (const BudgetExceeded& e) {
        failure = what + ": " + e.what();
      }
    };
    expect(completeGraph(4), GraphInvariant::StackNumber, 2, "sn(K4)");
    expect(completeGraph(4), GraphInvariant::QueueNumber, 2, "qn(K4)");
    auto k6start = Clock::now();
    expect(completeGraph(6), GraphInvariant::StackNumber, 3, "sn(K6)");
    double k6time = secondsSince(k6start);
    expect(completeGraph(6), GraphInvariant::QueueNumber, 3, "qn(K6)");
    if (failure.empty() && k6time >= 60.0) {
      failure = "K6 stack search took " + std::to_string(k6time) + " s";
    }
    std::ostringstream detail;
    detail << "sn/qn of K4 and K6 as predicted, K6 stack search " << std::fixed
           << std::setprecision(3) << k6time << " s";
    report(5, "complete graph sanity", failure.empty(),
           failure.empty() ? detail.str() : failure, secondsSince(start));
  }

  void criterion6() {
    auto start = Clock::now();
    std::string failure;
    long long checkedPairs = 0;
    long long decomposed = 0;
    for (int n = 1; n <= 6 && failure.empty(); ++n) {
      std::vector<Edge> slots;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
      const int slotCount = static_cast<int>(slots.size());
      std::vector<int> order = identityOrder(n);
      do {
        std::vector<int> pos = positionsOf(order, n);
        // conflictMask[i]: slots that cross or nest slot i under this order
        std::vector<std::uint32_t> conflictMask(slotCount, 0);
        for (int i = 0; i < slotCount; ++i) {
          for (int j = i + 1; j < slotCount; ++j) {
            const Edge& a = slots[i];
            const Edge& b = slots[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
            int al = std::min(pos[a.u], pos[a.v]), ar = std::max(pos[a.u], pos[a.v]);
            int bl = std::min(pos[b.u], pos[b.v]), br = std::max(pos[b.u], pos[b.v]);
            if (bl < al) {
              std::swap(al, bl);
              std::swap(ar, br);
            }
            if (bl < ar) {  // nested or crossing
              conflictMask[i] |= 1u << j;
              conflictMask[j] |= 1u << i;
            }
          }
        }
        for (std::uint32_t mask = 0; mask < (1u << slotCount); ++mask) {
          ++checkedPairs;
          bool clean = true;
          for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            int i = std::countr_zero(bits);
            if (conflictMask[i] & mask) {
              clean = false;
              break;
            }
          }
          if (!clean) continue;
          std::vector<Edge> edges;
          for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            edges.push_back(slots[std::countr_zero(bits)]);
          }
          Graph g(n, edges);
          PathDecomposition pd;
          try {
            pd = pdFrom11Layout(g, order);
          } catch (const std::exception& e) {
            failure = "pdFrom11Layout rejected a clean pair: " + std::string(e.what());
            break;
          }
          ++decomposed;
          bool ok = static_cast<int>(pd.bags.size()) == n;
          for (int x = 0; x < n && ok; ++x) {
            ok = pd.bags[x].size() <= 3 &&
                 std::find(pd.bags[x].begin(), pd.bags[x].end(), order[x]) !=
                     pd.bags[x].end();
          }
          if (ok) {
            auto verdict = verifyPathDecomposition(g, pd);
            ok = verdict.valid && verdict.width <= 2;
          }
          if (!ok && failure.empty()) {
            std::ostringstream what;
            what << "bad decomposition for n=" << n << " mask=" << mask;
            failure = what.str();
          }
        }
        if (!failure.empty()) break;
      } while (std::next_permutation(order.begin(), order.end()));
    }
    std::ostringstream detail;
    detail << checkedPairs << " (graph, order) pairs screened, " << decomposed
           << " decompositions verified with n bags, |B| <= 3, v_x in B_x";
    report(6, "width-2 decompositions, exhaustive to n=6", failure.empty(),
           failure.empty() ? detail.str() : failure, secondsSince(start));
  }

  void criterion7() {
    auto start = Clock::now();
    std::string failure;
    int instances = 0;
    for (std::size_t gi = 0; gi < gFamily_.size() && failure.empty(); ++gi) {
      const GEntry& g = gFamily_[gi];
      const SimultaneousLayout& sim = gSims_[gi];
      int s = static_cast<int>(sim.stackPages.size());
      int q = static_cast<int>(sim.queuePages.size());
      PathDecomposition pd = pdFromSimultaneous(g.graph, sim);
      auto verdict = verifyPathDecomposition(g.graph, pd);
      if (!verdict.valid) {
        failure = g.name + ": " + verdict.reason;
        break;
      }
      if (verdict.width > 2 * s * q) {
        failure = g.name + ": width " + std::to_string(verdict.width) + " above 2sq = " +
                  std::to_string(2 * s * q);
        break;
      }
      for (const auto& bag : pd.bags) {
        if (static_cast<int>(bag.size()) > 2 * s * q + 1) {
          failure = g.name + ": bag of size " + std::to_string(bag.size());
          break;
        }
      }
      ++instances;
    }
    std::ostringstream detail;
    detail << instances << " decompositions within width 2sq and bag size 2sq+1";
    report(7, "theorem-2 bag unions", failure.empty(),
           failure.empty() ? detail.str() : failure, secondsSince(start));
  }

  void criterion8() {
    auto start = Clock::now();
    std::string failure;
    int instances = 0;
    for (const StrongOutput& out : strongOutputs_) {
      const int s = static_cast<int>(out.layout.pages.size());
      SeparatedExtraction ex;
      try {
        ex = simultaneousFromSeparated(out.product, out.layout);
      } catch (const std::exception& e) {
        failure = "extraction failed: " + std::string(e.what());
        break;
      }
      const Graph& g = out.product.factorB();
      checkValid(g, ex.sim, failure, "extracted simultaneous layout");
      if (failure.empty() && static_cast<int>(ex.sim.stackPages.size()) > s) {
        failure = "extraction used " + std::to_string(ex.sim.stackPages.size()) +
                  " stacks from an s = " + std::to_string(s) + " layout";
      }
      if (failure.empty() &&
          static_cast<long long>(ex.sim.queuePages.size()) >
              static_cast<long long>(s) * s) {
        failure = "extraction used " + std::to_string(ex.sim.queuePages.size()) +
                  " queues from an s = " + std::to_string(s) + " layout";
      }
      if (!failure.empty()) break;
      ++instances;
    }
    std::ostringstream detail;
    detail << instances
           << " separated layouts reduced to simultaneous (s, s^2) layouts; the rainbow "
              "check never fired";
    report(8, "theorem-3 extraction", failure.empty(),
           failure.empty() ? detail.str() : failure, secondsSince(start));
  }

  void criterion9() {
    auto start = Clock::now();
    std::string failure;
    long long runs = 0;
    for (int a = 1; a <= 4 && failure.empty(); ++a) {
      for (int b = 1; b <= 4 && failure.empty(); ++b) {
        std::mt19937_64 rng(1000 * a + b);
        for (int iter = 0; iter < 10000; ++iter) {
          std::vector<long long> seq(a * b + 1);
          for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = static_cast<long long>(i);
          std::shuffle(seq.begin(), seq.end(), rng);
          MonotoneSubsequence r = erdosSzekeres(seq, a, b);
          bool lengthOk = r.increasing
                              ? static_cast<int>(r.values.size()) >= a + 1
                              : static_cast<int>(r.values.size()) >= b + 1;
          bool monotone = true;
          for (std::size_t i = 0; i + 1 < r.values.size(); ++i) {
            monotone = monotone && (r.increasing ? r.values[i] < r.values[i + 1]
                                                 : r.values[i] > r.values[i + 1]);
          }
          bool isSubsequence = true;
          for (std::size_t i = 0; i < r.indices.size(); ++i) {
            if (i + 1 < r.indices.size() && r.indices[i] >= r.indices[i + 1]) {
              isSubsequence = false;
            }
            if (r.indices[i] < 0 || r.indices[i] >= static_cast<int>(seq.size()) ||
                seq[r.indices[i]] != r.values[i]) {
              isSubsequence = false;
            }
          }
          if (!(lengthOk && monotone && isSubsequence)) {
            std::ostringstream what;
            what << "bad extraction at a=" << a << " b=" << b << " iter=" << iter;
            failure = what.str();
            break;
          }
          ++runs;
        }
      }
    }
    double elapsed = secondsSince(start);
    if (failure.empty() && elapsed >= 5.0) {
      failure = "sweep took " + std::to_string(elapsed) + " s";
    }
    std::ostringstream detail;
    detail << runs << " random sequences, every extraction monotone and long enough";
    report(9, "erdos-szekeres extractor", failure.empty(),
           failure.empty() ? detail.str() : failure, elapsed);
  }

  void criterion10() {
    auto start = Clock::now();
    std::string failure;
    int classes = 0;
    for (int n = 4; n <= 6 && failure.empty(); ++n) {
      std::vector<Edge> slots;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
      const int slotCount = static_cast<int>(slots.size());

      // remap tables: permutation -> slot image
      std::vector<std::vector<int>> remaps;
      std::vector<int> perm = identityOrder(n);
      do {
        std::vector<int> table(slotCount);
        for (int i = 0; i < slotCount; ++i) {
          Edge e = makeEdge(perm[slots[i].u], perm[slots[i].v]);
          table[i] = static_cast<int>(
              std::lower_bound(slots.begin(), slots.end(), e) - slots.begin());
        }
        remaps.push_back(std::move(table));
      } while (std::next_permutation(perm.begin(), perm.end()));

      auto connected = [&](std::uint32_t mask) {
        std::uint32_t reach = 1;
        for (int round = 0; round < n; ++round) {
          for (int i = 0; i < slotCount; ++i) {
            if (!(mask >> i & 1)) continue;
            std::uint32_t uBit = 1u << slots[i].u;
            std::uint32_t vBit = 1u << slots[i].v;
            if (reach & uBit) reach |= vBit;
            if (reach & vBit) reach |= uBit;
          }
        }
        return reach == (1u << n) - 1;
      };

      for (std::uint32_t mask = 0; mask < (1u << slotCount) && failure.empty(); ++mask) {
        if (!connected(mask)) continue;
        std::uint32_t canonical = mask;
        for (const auto& table : remaps) {
          std::uint32_t image = 0;
          for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            image |= 1u << table[std::countr_zero(bits)];
          }
          canonical = std::min(canonical, image);
        }
        if (canonical != mask) continue;  // one representative per class
        std::vector<Edge> edges;
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
          edges.push_back(slots[std::countr_zero(bits)]);
        }
        Graph g(n, edges);
        int lb = densityLowerBound(g);
        int sn = exactInvariant(g, GraphInvariant::StackNumber).value;
        if (lb > sn) {
          std::ostringstream what;
          what << "density bound " << lb << " beats sn " << sn << " on n=" << n
               << " mask=" << mask;
          failure = what.str();
        }
        ++classes;
      }
    }
    // Density trend on a product too large for the exact oracle.
    ProductGraph big = product(pathGraph(10), completeGraph(4), ProductKind::Strong);
    int bigBound = densityLowerBound(big.graph());
    if (failure.empty() && bigBound < 3 * 2 - 1) {
      failure = "density bound of P10 x K4 fell to " + std::to_string(bigBound);
    }
    std::ostringstream detail;
    detail << classes << " connected graphs (one per isomorphism class, n=4..6); "
           << "density(P10 strong K4) = " << bigBound << " >= 5";
    report(10, "density bound vs exact stack number", failure.empty(),
           failure.empty() ? detail.str() : failure, secondsSince(start));
  }

  void criterion11() {
    auto start = Clock::now();
    std::string failure;
    // Every construction in the sweep above went through the verifier.
    if (verifiedLayouts_ == 0) failure = "no layouts were verified";

    // Violation reports reproduce byte for byte.
    Graph g(6, {{0, 2}, {0, 4}, {1, 3}, {1, 5}});
    Layout bad{identityOrder(6), {g.edges()}, Discipline::Stack};
    auto v1 = verify(g, bad);
    auto v2 = verify(g, bad);
    if (!v1 || !v2 || toJson(*v1).dump() != toJson(*v2).dump()) {
      failure = "violation report changed between runs";
    }
    SimultaneousLayout badSim{identityOrder(6), {g.edges()}, {g.edges()}};
    auto s1 = verify(g, badSim);
    auto s2 = verify(g, badSim);
    if (failure.empty() && (!s1 || !s2 || toJson(*s1).dump() != toJson(*s2).dump())) {
      failure = "simultaneous violation report changed between runs";
    }

    // Constructions are deterministic end to end.
    auto grid1 = grid4Stack(5, 5);
    auto grid2 = grid4Stack(5, 5);
    if (failure.empty() &&
        toJson(grid1.layout).dump() != toJson(grid2.layout).dump()) {
      failure = "grid construction output changed between runs";
    }
    std::ostringstream detail;
    detail << verifiedLayouts_
           << " layouts passed verification across the sweep; violation reports and "
              "constructions reproduce";
    report(11, "master property suite", failure.empty(),
           failure.empty() ? detail.str() : failure, secondsSince(start));
  }
};

}  // namespace

std::vector<CriterionResult> runAll(std::ostream& out) {
  Suite suite(out);
  return suite.run();
}

std::string formatLine(const CriterionResult& result) {
  std::ostringstream line;
  line << "criterion " << std::setw(2) << result.id << " "
       << (result.passed ? "PASS" : "FAIL") << "  " << result.name << ": "
       << result.detail << " (" << std::fixed << std::setprecision(2)
       << result.seconds << " s)\n";
  return line.str();
}

bool allPassed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.passed) return false;
  }
  return !results.empty();
}

}  // namespace linlay::acceptance
