#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

// stderr is discarded unless merge is set
Run run(const std::string& args, bool merge = false) {
  std::string cmd = std::string("\"") + PDPP_CLI_PATH + "\" " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string("\"") + PDPP_DATA_DIR + "/" + name + "\""; }

fs::path scratch() {
  auto d = fs::temp_directory_path() / "pdpp_cli_test";
  fs::create_directories(d);
  return d;
}

std::string write_tmp(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text;
  return "\"" + p.string() + "\"";
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli solve answers") {
  auto r = run("solve " + data("k2.dpp"));
  CHECK(r.code == 0);
  CHECK(r.out == "s dpp yes\npath 1 1 2\n");

  r = run("solve " + data("cross2x2.dpp"));
  CHECK(r.code == 1);
  CHECK(r.out == "s dpp no\n");

  for (const char* engine : {"dp", "oracle", "pipeline"}) {
    CAPTURE(engine);
    r = run(std::string("solve --engine ") + engine + " " + data("big.dpp"));
    // both pairs on the outer face in crossing order
    CHECK(r.code == 1);
    CHECK(has(r.out, "s dpp no"));
  }
}

TEST_CASE("cli solve indeterminate") {
  auto r = run("solve --engine oracle --budget 50 " + data("big.dpp"));
  CHECK(r.code == 2);
  CHECK(has(r.out, "s dpp unknown"));
}

TEST_CASE("cli solve several files") {
  auto r = run("solve --jobs 2 " + data("k2.dpp") + " " + data("cross2x2.dpp"));
  CHECK(r.code == 1);
  auto a = r.out.find("k2.dpp");
  auto b = r.out.find("cross2x2.dpp");
  REQUIRE(a != std::string::npos);
  REQUIRE(b != std::string::npos);
  CHECK(a < b);  // input order, not completion order
  CHECK(has(r.out, "s dpp yes"));
  CHECK(has(r.out, "s dpp no"));
}

TEST_CASE("cli solve json and decomposition") {
  auto r = run("solve --json " + data("k2.dpp"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"answer\":\"yes\""));
  CHECK(has(r.out, "\"paths\":[[1,2]]"));

  auto td = scratch() / "td.txt";
  r = run("solve --engine dp --emit-decomposition \"" + td.string() + "\" " + data("k2.dpp"));
  CHECK(r.code == 0);
  std::ifstream in(td);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(has(ss.str(), "node 0 bag"));
}

TEST_CASE("cli solve pipeline on a grid") {
  auto r = run("solve " + data("grid20.dpp"), true);
  CHECK(r.code == 0);
  CHECK(has(r.out, "s dpp yes"));
  CHECK(has(r.out, "irrelevant "));
}

TEST_CASE("cli gen is deterministic") {
  auto a = run("gen grid --size 6 --pairs 2 --seed 7");
  auto b = run("gen grid --size 6 --pairs 2 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(has(a.out, "p dpp 36 60 2"));
  auto c = run("gen grid --size 6 --pairs 2 --seed 8");
  CHECK(c.out != a.out);

  auto f = scratch() / "rand.dpp";
  auto g = run("gen random --vertices 12 --edges 20 --pairs 2 --seed 3 -o \"" + f.string() + "\"");
  CHECK(g.code == 0);
  auto s = run("solve --engine oracle \"" + f.string() + "\"");
  CHECK((s.code == 0 || s.code == 1));
}

TEST_CASE("cli verify") {
  auto good = write_tmp("good.sol", "s dpp yes\npath 1 1 2\n");
  auto bad = write_tmp("bad.sol", "s dpp yes\npath 1 1\n");
  auto r = run("verify " + data("k2.dpp") + " " + good);
  CHECK(r.code == 0);
  CHECK(r.out == "ok\n");
  r = run("verify " + data("k2.dpp") + " " + bad);
  CHECK(r.code == 1);
  CHECK(has(r.out, "invalid:"));
}

TEST_CASE("cli analyze") {
  auto r = run("analyze " + data("branching.dpp") + " --cycles " + data("branching.cycles") + " --linkage " +
               data("branching.paths"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "convex: true"));
  CHECK(has(r.out, "leaves: 11\n"));
  CHECK(has(r.out, "real height: 4\n"));
  CHECK(has(r.out, "dilation: 4\n"));
  CHECK(has(r.out, "classes: 19\n"));

  r = run("analyze " + data("chords.dpp") + " --cycles " + data("chords.cycles") + " --linkage " +
          data("chords.paths"));
  CHECK(has(r.out, "convex: false (clause ii.a"));

  r = run("analyze " + data("chords.dpp") + " --cycles " + data("chords.cycles"));
  CHECK(has(r.out, "segments: 0\n"));
  CHECK(has(r.out, "convex: true"));
}

TEST_CASE("cli reduce") {
  auto r = run("reduce --mode heuristic " + data("grid20.dpp"));
  CHECK(r.code == 0);
  CHECK(r.out == "irrelevant 1 grid 6 cycles 1 mode heuristic\n");

  auto out = scratch() / "reduced.dpp";
  r = run("reduce --mode heuristic --max 3 -o \"" + out.string() + "\" " + data("grid20.dpp"));
  CHECK(r.code == 0);
  auto s = run("solve \"" + out.string() + "\"");
  CHECK(s.code == 0);

  r = run("reduce --mode certified " + data("grid20.dpp"));
  CHECK(r.code == 1);
}

TEST_CASE("cli route") {
  auto r = run("route " + data("pattern3.txt"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "path 1 1 2\npath 2 3 6 9\npath 3 7 8\n"));
  r = run("route --json " + data("pattern3.txt"));
  CHECK(has(r.out, "\"ok\":true"));
  r = run("route " + data("crossing.txt"));
  CHECK(r.code == 1);
}

TEST_CASE("cli errors") {
  CHECK(run("").code == 64);
  CHECK(run("solve --bogus " + data("k2.dpp")).code == 64);
  CHECK(run("solve --engine nope " + data("k2.dpp")).code == 64);
  CHECK(run("solve /nonexistent/x.dpp").code == 66);
  auto bad = write_tmp("bad.dpp", "p dpp 2 1 1\ne 1 x\n");
  auto r = run("solve " + bad, true);
  CHECK(r.code == 65);
  CHECK(has(r.out, "line 2, col 5"));
}
