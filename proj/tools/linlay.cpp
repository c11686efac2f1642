// linlay: construct, verify, and analyze stack/queue/dispersable and
// simultaneous linear layouts of graphs and graph products.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "linlay/acceptance.hpp"
#include "linlay/constructions.hpp"
#include "linlay/decomposition.hpp"
#include "linlay/graph.hpp"
#include "linlay/json_io.hpp"
#include "linlay/layout.hpp"
#include "linlay/oracle.hpp"
#include "linlay/product.hpp"
#include "linlay/render.hpp"

using nlohmann::json;
using namespace linlay;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string fnv1aDigest(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

// Tracks files read and written so each run can emit a manifest that pins
// its inputs and outputs.
struct RunContext {
  std::string commandLine;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;

  std::string readFile(const std::string& path) {
    std::string content;
    if (path == "-") {
      std::ostringstream buffer;
      buffer << std::cin.rdbuf();
      content = buffer.str();
      inputs.push_back({"<stdin>", fnv1aDigest(content)});
      return content;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    content = buffer.str();
    inputs.push_back({path, fnv1aDigest(content)});
    return content;
  }

  void writeFile(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
      std::cout << content;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
    outputs.push_back({path, fnv1aDigest(content)});
  }

  void emitManifest(const std::string& outputPath, const std::string& manifestPath) {
    std::string path = manifestPath;
    if (path.empty()) {
      if (outputPath.empty() || outputPath == "-") return;
      path = outputPath + ".manifest.json";
    }
    json manifest;
    manifest["command"] = commandLine;
    manifest["version"] = kVersion;
    manifest["seed"] = seed ? json(*seed) : json(nullptr);
    json in = json::object();
    for (const auto& [file, digest] : inputs) in[file] = digest;
    json out = json::object();
    for (const auto& [file, digest] : outputs) out[file] = digest;
    manifest["inputs"] = in;
    manifest["outputs"] = out;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open manifest file '" + path + "'");
    file << manifest.dump(2) << "\n";
  }
};

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

bool looksLikeJson(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

// Accepts plain graph JSON, edge-list text, a product document, or a
// {product, layout} bundle; returns the graph to verify against.
Graph loadAnyGraph(const std::string& text) {
  if (!looksLikeJson(text)) return graphFromEdgeList(text);
  json j = json::parse(text);
  if (j.contains("product")) return productFromJson(j["product"]).graph();
  if (j.contains("factor_a")) return productFromJson(j).graph();
  return graphFromJson(j);
}

Graph loadPlainGraph(const std::string& text) {
  if (!looksLikeJson(text)) return graphFromEdgeList(text);
  return graphFromJson(json::parse(text));
}

ProductGraph loadProduct(const std::string& text) {
  json j = json::parse(text);
  if (j.contains("product")) return productFromJson(j["product"]);
  return productFromJson(j);
}

std::vector<int> parseOrderList(const std::string& text) {
  std::vector<int> order;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    order.push_back(std::stoi(token, &used));
    if (used != token.size()) throw std::invalid_argument("bad order entry '" + token + "'");
  }
  if (order.empty()) throw std::invalid_argument("empty vertex order");
  return order;
}

// --order wins; otherwise --order-file (a JSON array or {"order": [...]});
// otherwise a witness_order field riding on the input graph document.
std::vector<int> resolveOrder(RunContext& ctx, const std::string& orderSpec,
                              const std::string& orderFile, const std::string& inputText) {
  if (!orderSpec.empty()) return parseOrderList(orderSpec);
  if (!orderFile.empty()) {
    json j = json::parse(ctx.readFile(orderFile));
    if (j.is_object() && j.contains("order")) j = j["order"];
    if (!j.is_array()) throw std::invalid_argument("order file must hold an array");
    return j.get<std::vector<int>>();
  }
  if (looksLikeJson(inputText)) {
    json j = json::parse(inputText);
    if (j.contains("witness_order")) return j["witness_order"].get<std::vector<int>>();
  }
  throw std::invalid_argument("no vertex order given (use --order or --order-file)");
}

OracleBudget budgetFromEnv() {
  OracleBudget budget;
  if (const char* n = std::getenv("LINLAY_BUDGET_N")) budget.maxVertices = std::atoi(n);
  if (const char* s = std::getenv("LINLAY_BUDGET_SECONDS")) {
    budget.timeLimit = std::chrono::seconds(std::atol(s));
  }
  return budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear layouts of graphs and graph products"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunContext ctx;
  {
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
    ctx.commandLine = cmd.str();
  }

  std::string input = "-", output, manifest, format = "json";
  std::string kindName = "strong";
  std::uint64_t seed = 0;
  bool seedGiven = false;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
  std::string family;
  std::vector<int> params;
  gen->add_option("family", family, "path, cycle, star, complete, complete_bipartite, caterpillar, random_pathwidth")->required();
  gen->add_option("params", params, "integer parameters of the family");
  gen->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seedGiven = true; });
  gen->add_option("--output,-o", output, "output file (default stdout)");
  gen->add_option("--manifest", manifest, "manifest file");
  gen->add_option("--format", format, "json or text (edge list)");

  // product
  auto* prod = app.add_subcommand("product", "build a graph product with edge classes");
  std::string aFile, bFile;
  prod->add_option("--a", aFile, "first factor (graph JSON or edge list)")->required();
  prod->add_option("--b", bFile, "second factor")->required();
  prod->add_option("--kind", kindName, "cartesian, direct, or strong");
  prod->add_option("--output,-o", output, "output file (default stdout)");
  prod->add_option("--manifest", manifest, "manifest file");

  // embed
  auto* embed = app.add_subcommand("embed", "run a layout construction");
  embed->require_subcommand(1);
  std::string hFile, hLayoutFile, gFile, gLayoutFile, layoutFile, orderSpec, orderFile;
  int pBound = 1, gridN = 2, gridM = 2;

  auto* lemma2 = embed->add_subcommand(
      "lemma2", "simultaneous p-stack p-queue layout from a separation order");
  lemma2->add_option("--input,-i", input, "graph (JSON or edge list; - for stdin)");
  lemma2->add_option("--order", orderSpec, "comma-separated vertex order");
  lemma2->add_option("--order-file", orderFile, "JSON file with the vertex order");
  lemma2->add_option("--p", pBound, "vertex separation bound")->required();
  lemma2->add_option("--output,-o", output, "output file");
  lemma2->add_option("--manifest", manifest, "manifest file");

  auto* lemma3 = embed->add_subcommand(
      "lemma3", "split a stack layout of a bipartite graph into matchings");
  lemma3->add_option("--input,-i", input, "graph");
  lemma3->add_option("--layout", layoutFile, "stack layout JSON")->required();
  lemma3->add_option("--output,-o", output, "output file");
  lemma3->add_option("--manifest", manifest, "manifest file");

  auto* theorem1 = embed->add_subcommand(
      "theorem1", "stack layout of a product from dispersable and simultaneous layouts");
  theorem1->add_option("--h-input", hFile, "bipartite factor H")->required();
  theorem1->add_option("--h-layout", hLayoutFile, "dispersable layout of H")->required();
  theorem1->add_option("--g-input", gFile, "factor G")->required();
  theorem1->add_option("--g-layout", gLayoutFile, "simultaneous layout of G")->required();
  theorem1->add_option("--kind", kindName, "cartesian, direct, or strong");
  theorem1->add_option("--output,-o", output, "output file");
  theorem1->add_option("--manifest", manifest, "manifest file");

  auto* grid4 = embed->add_subcommand("grid4", "4-stack layout of a strong grid");
  grid4->add_option("--n", gridN, "path length of the first factor")->required();
  grid4->add_option("--m", gridM, "path length of the second factor")->required();
  grid4->add_option("--output,-o", output, "output file");
  grid4->add_option("--manifest", manifest, "manifest file");

  auto* theorem3 = embed->add_subcommand(
      "theorem3", "extract a simultaneous layout from a separated product layout");
  theorem3->add_option("--input,-i", input, "product document or {product, layout} bundle");
  theorem3->add_option("--layout", layoutFile, "stack layout JSON (if not bundled)");
  theorem3->add_option("--output,-o", output, "output file");
  theorem3->add_option("--manifest", manifest, "manifest file");

  // verify
  auto* verifyCmd = app.add_subcommand("verify", "check a layout against its graph");
  verifyCmd->add_option("--input,-i", input, "graph, product, or bundle");
  verifyCmd->add_option("--layout", layoutFile, "layout or simultaneous layout JSON");
  verifyCmd->add_option("--output,-o", output, "output file");
  verifyCmd->add_option("--manifest", manifest, "manifest file");
  verifyCmd->add_option("--format", format, "json or text");

  // decompose
  auto* dec11 = app.add_subcommand("decompose-11",
                                   "width-2 path decomposition from a 1-stack 1-queue order");
  dec11->add_option("--input,-i", input, "graph");
  dec11->add_option("--order", orderSpec, "comma-separated vertex order");
  dec11->add_option("--order-file", orderFile, "JSON file with the vertex order");
  dec11->add_option("--output,-o", output, "output file");
  dec11->add_option("--manifest", manifest, "manifest file");

  auto* decSq = app.add_subcommand("decompose-sq",
                                   "path decomposition from a simultaneous layout");
  decSq->add_option("--input,-i", input, "graph");
  decSq->add_option("--layout", layoutFile, "simultaneous layout JSON")->required();
  decSq->add_option("--output,-o", output, "output file");
  decSq->add_option("--manifest", manifest, "manifest file");

  // oracle
  auto* oracleCmd = app.add_subcommand("oracle", "exact invariants by brute force");
  std::string invariantName = "stack_number";
  int budgetN = -1;
  long budgetSeconds = -1;
  bool noPrune = false;
  oracleCmd->add_option("--input,-i", input, "graph");
  oracleCmd->add_option("--invariant", invariantName,
                        "stack_number, queue_number, dispersable_number, pathwidth");
  oracleCmd->add_option("--budget-n", budgetN, "max vertices (default 9 or LINLAY_BUDGET_N)");
  oracleCmd->add_option("--budget-seconds", budgetSeconds,
                        "time limit (default 60 or LINLAY_BUDGET_SECONDS)");
  oracleCmd->add_flag("--no-prune", noPrune, "disable reversal-symmetry pruning");
  oracleCmd->add_option("--output,-o", output, "output file");
  oracleCmd->add_option("--manifest", manifest, "manifest file");

  // render
  auto* render = app.add_subcommand("render", "arc diagram as SVG");
  bool force = false, noLabels = false;
  int spacing = 40;
  render->add_option("--input,-i", input, "graph, product, or bundle");
  render->add_option("--layout", layoutFile, "layout or simultaneous layout JSON");
  render->add_option("--output,-o", output, "output file (default stdout)");
  render->add_option("--manifest", manifest, "manifest file");
  render->add_option("--spacing", spacing, "pixels between vertices");
  render->add_flag("--force", force, "render even if verification fails");
  render->add_flag("--no-labels", noLabels, "omit vertex labels");
  render->add_option("--format", format, "svg");

  // report
  auto* reportCmd = app.add_subcommand("report", "run the acceptance sweep");
  reportCmd->add_option("--output,-o", output, "write the summary table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (seedGiven && family == "random_pathwidth" && params.size() == 2) ctx.seed = seed;
      GeneratedGraph result = generateGraph(family, params, seed);
      if (format == "text") {
        ctx.writeFile(output, graphToEdgeList(result.graph));
      } else {
        json j = toJson(result.graph);
        if (result.witnessOrder) j["witness_order"] = *result.witnessOrder;
        ctx.writeFile(output, dumped(j));
      }
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (prod->parsed()) {
      Graph a = loadPlainGraph(ctx.readFile(aFile));
      Graph b = loadPlainGraph(ctx.readFile(bFile));
      ProductGraph pg = product(a, b, productKindFromName(kindName));
      ctx.writeFile(output, dumped(toJson(pg)));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (lemma2->parsed()) {
      std::string text = ctx.readFile(input);
      Graph g = loadPlainGraph(text);
      std::vector<int> order = resolveOrder(ctx, orderSpec, orderFile, text);
      SimultaneousLayout sim = simultaneousFromOrder(g, order, pBound);
      ctx.writeFile(output, dumped(toJson(sim)));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (lemma3->parsed()) {
      Graph g = loadPlainGraph(ctx.readFile(input));
      Layout stacks = layoutFromJson(json::parse(ctx.readFile(layoutFile)));
      Layout disp = dispersableFromStack(g, stacks);
      ctx.writeFile(output, dumped(toJson(disp)));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (theorem1->parsed()) {
      Graph h = loadPlainGraph(ctx.readFile(hFile));
      Layout hDisp = layoutFromJson(json::parse(ctx.readFile(hLayoutFile)));
      Graph g = loadPlainGraph(ctx.readFile(gFile));
      SimultaneousLayout gSim = simultaneousFromJson(json::parse(ctx.readFile(gLayoutFile)));
      auto res = productStackLayout(h, hDisp, g, gSim, productKindFromName(kindName));
      json bundle{{"product", toJson(res.product)}, {"layout", toJson(res.layout)}};
      ctx.writeFile(output, dumped(bundle));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (grid4->parsed()) {
      auto res = grid4Stack(gridN, gridM);
      json bundle{{"product", toJson(res.product)}, {"layout", toJson(res.layout)}};
      ctx.writeFile(output, dumped(bundle));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (theorem3->parsed()) {
      std::string text = ctx.readFile(input);
      ProductGraph pg = loadProduct(text);
      Layout layout;
      if (!layoutFile.empty()) {
        layout = layoutFromJson(json::parse(ctx.readFile(layoutFile)));
      } else {
        json j = json::parse(text);
        if (!j.contains("layout")) {
          throw std::invalid_argument("no layout given (bundle or --layout)");
        }
        layout = layoutFromJson(j["layout"]);
      }
      SeparatedExtraction ex = simultaneousFromSeparated(pg, layout);
      ctx.writeFile(output, dumped(toJson(ex.sim)));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (verifyCmd->parsed()) {
      std::string text = ctx.readFile(input);
      Graph g = loadAnyGraph(text);
      json layoutDoc;
      if (!layoutFile.empty()) {
        layoutDoc = json::parse(ctx.readFile(layoutFile));
      } else {
        json j = json::parse(text);
        if (!j.contains("layout")) {
          throw std::invalid_argument("no layout given (bundle or --layout)");
        }
        layoutDoc = j["layout"];
      }
      std::optional<Violation> violation;
      if (layoutDoc.contains("stack_pages")) {
        violation = verify(g, simultaneousFromJson(layoutDoc));
      } else {
        violation = verify(g, layoutFromJson(layoutDoc));
      }
      json verdict;
      verdict["valid"] = !violation.has_value();
      if (violation) verdict["violation"] = toJson(*violation);
      if (format == "text") {
        ctx.writeFile(output, violation ? "INVALID: " + violation->reason + "\n"
                                        : std::string("VALID\n"));
      } else {
        ctx.writeFile(output, dumped(verdict));
      }
      ctx.emitManifest(output, manifest);
      return violation ? kExitViolation : kExitOk;
    }

    if (dec11->parsed()) {
      std::string text = ctx.readFile(input);
      Graph g = loadPlainGraph(text);
      std::vector<int> order = resolveOrder(ctx, orderSpec, orderFile, text);
      PathDecomposition pd = pdFrom11Layout(g, order);
      ctx.writeFile(output, dumped(toJson(pd)));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (decSq->parsed()) {
      Graph g = loadPlainGraph(ctx.readFile(input));
      SimultaneousLayout sim = simultaneousFromJson(json::parse(ctx.readFile(layoutFile)));
      PathDecomposition pd = pdFromSimultaneous(g, sim);
      ctx.writeFile(output, dumped(toJson(pd)));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (oracleCmd->parsed()) {
      Graph g = loadPlainGraph(ctx.readFile(input));
      OracleBudget budget = budgetFromEnv();
      if (budgetN >= 0) budget.maxVertices = budgetN;
      if (budgetSeconds >= 0) budget.timeLimit = std::chrono::seconds(budgetSeconds);
      budget.pruneReversal = !noPrune;
      OracleResult result = exactInvariant(g, invariantFromName(invariantName), budget);
      ctx.writeFile(output, dumped(toJson(result)));
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (render->parsed()) {
      if (format != "svg" && format != "json") {
        throw std::invalid_argument("render emits svg");
      }
      std::string text = ctx.readFile(input);
      Graph g = loadAnyGraph(text);
      json layoutDoc;
      if (!layoutFile.empty()) {
        layoutDoc = json::parse(ctx.readFile(layoutFile));
      } else {
        json j = json::parse(text);
        if (!j.contains("layout")) {
          throw std::invalid_argument("no layout given (bundle or --layout)");
        }
        layoutDoc = j["layout"];
      }
      RenderOptions options;
      options.force = force;
      options.labels = !noLabels;
      options.spacing = spacing;
      std::string svg;
      if (layoutDoc.contains("stack_pages")) {
        svg = renderArcDiagram(g, simultaneousFromJson(layoutDoc), options);
      } else {
        svg = renderArcDiagram(g, layoutFromJson(layoutDoc), options);
      }
      ctx.writeFile(output, svg);
      ctx.emitManifest(output, manifest);
      return kExitOk;
    }

    if (reportCmd->parsed()) {
      auto results = acceptance::runAll(std::cout);
      if (!output.empty() && output != "-") {
        std::ostringstream table;
        for (const auto& r : results) table << acceptance::formatLine(r);
        ctx.writeFile(output, table.str());
      }
      return acceptance::allPassed(results) ? kExitOk : kExitViolation;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TwistWitnessError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
