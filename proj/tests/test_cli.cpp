// End-to-end checks of the command-line tool. The binary path comes from
// LINLAY_CLI_BIN (set by CTest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "linlay/constructions.hpp"
#include "linlay/graph.hpp"
#include "linlay/json_io.hpp"

using namespace linlay;
using nlohmann::json;

namespace {

std::string cliBin() {
  const char* bin = std::getenv("LINLAY_CLI_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

struct RunResult {
  int exitCode = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string command = cliBin() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exitCode = WEXITSTATUS(status);
  return result;
}

std::string tempDir() {
  static std::string dir = [] {
    std::string templ = "/tmp/linlay-cli-XXXXXX";
    char* made = mkdtemp(templ.data());
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

std::string writeTemp(const std::string& name, const std::string& content) {
  std::string path = tempDir() + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("gen matches the library output byte for byte") {
  RunResult r = run("gen path 5");
  CHECK(r.exitCode == 0);
  CHECK(r.output == toJson(pathGraph(5)).dump(2) + "\n");
}

TEST_CASE("gen text format emits the edge-list dialect") {
  RunResult r = run("gen path 3 --format text");
  CHECK(r.exitCode == 0);
  CHECK(r.output == "n=3\n0 1\n1 2\n");
}

TEST_CASE("gen usage errors exit with 2") {
  CHECK(run("gen moebius 5").exitCode == 2);
  CHECK(run("gen path").exitCode == 2);
  CHECK(run("frobnicate").exitCode == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  RunResult a = run("gen random_pathwidth 2 10 --seed 17");
  RunResult b = run("gen random_pathwidth 2 10 --seed 17");
  CHECK(a.exitCode == 0);
  CHECK(a.output == b.output);
  RunResult c = run("gen random_pathwidth 2 10 --seed 18");
  CHECK(c.output != a.output);
}

TEST_CASE("product subcommand matches the library") {
  std::string a = writeTemp("a.json", toJson(pathGraph(3)).dump());
  std::string b = writeTemp("b.json", toJson(pathGraph(4)).dump());
  RunResult r = run("product --a " + a + " --b " + b + " --kind strong");
  CHECK(r.exitCode == 0);
  ProductGraph expected = product(pathGraph(3), pathGraph(4), ProductKind::Strong);
  CHECK(r.output == toJson(expected).dump(2) + "\n");
}

TEST_CASE("full pipeline: gen, lemma2, theorem1, verify, theorem3, decompose") {
  std::string gPath = tempDir() + "/g.json";
  CHECK(run("gen random_pathwidth 2 8 --seed 5 -o " + gPath).exitCode == 0);

  std::string simPath = tempDir() + "/sim.json";
  CHECK(run("embed lemma2 -i " + gPath + " --p 2 -o " + simPath).exitCode == 0);

  // H = P4 with its alternating dispersable layout
  std::string hPath = writeTemp("h.json", toJson(pathGraph(4)).dump());
  std::string hDispPath = writeTemp("hdisp.json", toJson(dispersablePath(4)).dump());

  std::string bundlePath = tempDir() + "/bundle.json";
  CHECK(run("embed theorem1 --h-input " + hPath + " --h-layout " + hDispPath +
            " --g-input " + gPath + " --g-layout " + simPath +
            " --kind strong -o " + bundlePath)
            .exitCode == 0);

  CHECK(run("verify -i " + bundlePath).exitCode == 0);

  std::string extractedPath = tempDir() + "/extracted.json";
  CHECK(run("embed theorem3 -i " + bundlePath + " -o " + extractedPath).exitCode == 0);
  CHECK(run("verify -i " + gPath + " --layout " + extractedPath).exitCode == 0);

  std::string pdPath = tempDir() + "/pd.json";
  CHECK(run("decompose-sq -i " + gPath + " --layout " + simPath + " -o " + pdPath)
            .exitCode == 0);
  json pd = json::parse(slurp(pdPath));
  CHECK(pd.contains("bags"));
}

TEST_CASE("verify reports violations with exit code 1") {
  std::string g = writeTemp("cross.json", toJson(Graph(4, {{0, 2}, {1, 3}})).dump());
  Layout bad{identityOrder(4), {{{0, 2}, {1, 3}}}, Discipline::Stack};
  std::string l = writeTemp("badlayout.json", toJson(bad).dump());
  RunResult r = run("verify -i " + g + " --layout " + l);
  CHECK(r.exitCode == 1);
  json verdict = json::parse(r.output);
  CHECK(verdict["valid"] == false);
  CHECK(verdict["violation"]["kind"] == "crossing");

  // determinism of the violation report
  RunResult again = run("verify -i " + g + " --layout " + l);
  CHECK(again.output == r.output);
}

TEST_CASE("decompose-11 uses the embedded witness order") {
  std::string gPath = tempDir() + "/star.json";
  json star = toJson(starGraph(3));
  star["witness_order"] = {1, 0, 2, 3};
  std::string p = writeTemp("star.json", star.dump());
  RunResult r = run("decompose-11 -i " + p);
  CHECK(r.exitCode == 0);
  json pd = json::parse(r.output);
  CHECK(pd["bags"].size() == 4);
  // an explicit order overrides
  RunResult r2 = run("decompose-11 -i " + p + " --order 1,2,0,3");
  CHECK(r2.exitCode == 0);
}

TEST_CASE("oracle subcommand emits value and witness") {
  std::string g = writeTemp("k4.json", toJson(completeGraph(4)).dump());
  RunResult r = run("oracle -i " + g + " --invariant stack_number");
  CHECK(r.exitCode == 0);
  json res = json::parse(r.output);
  CHECK(res["value"] == 2);
  CHECK(res["witness"].contains("pages"));

  RunResult pw = run("oracle -i " + g + " --invariant pathwidth");
  json pwRes = json::parse(pw.output);
  CHECK(pwRes["value"] == 3);

  // budget errors are usage errors
  CHECK(run("oracle -i " + g + " --invariant stack_number --budget-n 3").exitCode == 2);
}

TEST_CASE("render pipes svg") {
  std::string bundlePath = tempDir() + "/grid.json";
  CHECK(run("embed grid4 --n 3 --m 4 -o " + bundlePath).exitCode == 0);
  RunResult r = run("render -i " + bundlePath);
  CHECK(r.exitCode == 0);
  CHECK(r.output.rfind("<svg", 0) == 0);

  // invalid layouts are refused without --force
  std::string g = writeTemp("cross2.json", toJson(Graph(4, {{0, 2}, {1, 3}})).dump());
  Layout bad{identityOrder(4), {{{0, 2}, {1, 3}}}, Discipline::Stack};
  std::string l = writeTemp("badlayout2.json", toJson(bad).dump());
  CHECK(run("render -i " + g + " --layout " + l).exitCode == 2);
  CHECK(run("render -i " + g + " --layout " + l + " --force").exitCode == 0);
}

TEST_CASE("edge list input is accepted everywhere") {
  std::string p = writeTemp("p5.txt", "n=5\n0 1\n1 2\n2 3\n3 4\n");
  RunResult r = run("oracle -i " + p + " --invariant queue_number");
  CHECK(r.exitCode == 0);
  CHECK(json::parse(r.output)["value"] == 1);
}

TEST_CASE("manifests pin inputs and outputs") {
  std::string gPath = tempDir() + "/mg.json";
  CHECK(run("gen path 6 -o " + gPath).exitCode == 0);
  json manifest = json::parse(slurp(gPath + ".manifest.json"));
  CHECK(manifest["version"] == "0.1.0");
  CHECK(manifest["outputs"].contains(gPath));
  std::string digest = manifest["outputs"][gPath];
  CHECK(digest.rfind("fnv1a64:", 0) == 0);

  // rerunning reproduces the same digest
  std::string gPath2 = tempDir() + "/mg2.json";
  CHECK(run("gen path 6 -o " + gPath2).exitCode == 0);
  json manifest2 = json::parse(slurp(gPath2 + ".manifest.json"));
  CHECK(manifest2["outputs"][gPath2] == digest);
}
