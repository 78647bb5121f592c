#include <set>

#include "doctest.h"
#include "pdpp/instance.hpp"

using namespace pdpp;

namespace {

bool same_instance(const DppInstance& a, const DppInstance& b) {
  if (a.graph.num_vertices() != b.graph.num_vertices() || a.graph.edges() != b.graph.edges()) return false;
  for (Vertex v = 1; v <= a.graph.num_vertices(); ++v)
    if (a.graph.rotation(v) != b.graph.rotation(v)) return false;
  return a.graph.outer_dart() == b.graph.outer_dart() && a.pairs == b.pairs;
}

ParseError parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no error for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("smallest instance") {
  auto inst = parse_instance("p dpp 2 1 1\ne 1 2\nt 1 2\n");
  CHECK(inst.graph.num_vertices() == 2);
  CHECK(inst.graph.num_edges() == 1);
  CHECK(inst.k() == 1);
  CHECK(inst.pairs[0] == TerminalPair{1, 2});
}

TEST_CASE("grid file round trip") {
  auto gen = gen_grid_instance(6, 2, 7);
  auto text = write_instance(gen);
  auto inst = parse_instance(text);
  CHECK(inst.graph.num_vertices() == 36);
  CHECK(inst.k() == 2);
  CHECK(same_instance(gen, inst));
  CHECK(write_instance(inst) == text);
}

TEST_CASE("parse errors carry positions") {
  auto e = parse_error("p dpp 2 1 1\ne 1 2\nt 1 1\n");
  CHECK(e.line() == 3);
  CHECK(e.col() == 5);
  CHECK(std::string(e.what()).find("not distinct") != std::string::npos);

  e = parse_error("p dpp 3 2 1\ne 1 2\ne 1 2\nt 1 3\n");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("duplicate edge") != std::string::npos);

  e = parse_error("# header\np dpp 3 2 1\ne 1 x\n");
  CHECK(e.line() == 3);
  CHECK(e.col() == 5);

  e = parse_error("p dpp 3 1 1\ne 1 4\nt 1 2\n");
  CHECK(e.line() == 2);
  CHECK(std::string(e.what()).find("out of range") != std::string::npos);

  e = parse_error("p dpp 3 1 1\ne 1 2\nq 1 2\n");
  CHECK(e.line() == 3);
  CHECK(e.col() == 1);

  e = parse_error("p dpp 3 2 1\ne 1 2\nt 1 2\n");
  CHECK(std::string(e.what()).find("expected 2 edges") != std::string::npos);

  e = parse_error("p dpp 3 1 1\ne 2 1\nt 1 2\n");
  CHECK(e.line() == 2);
}

TEST_CASE("non-planar input rejected") {
  std::string k5 = "p dpp 5 10 1\n";
  for (int u = 1; u <= 5; ++u)
    for (int v = u + 1; v <= 5; ++v) k5 += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  k5 += "t 1 2\n";
  auto e = parse_error(k5);
  CHECK(std::string(e.what()).find("not planar") != std::string::npos);
}

TEST_CASE("rotation and outer lines") {
  // triangle with the rotation given, outer dart fixed
  auto inst = parse_instance("p dpp 3 3 1\ne 1 2\ne 2 3\ne 1 3\nrot 1 2 2 3\nrot 2 2 3 1\nrot 3 2 1 2\nouter 2 1\nt 1 3\n");
  CHECK(inst.graph.rotation(1) == std::vector<Vertex>{2, 3});
  CHECK(inst.graph.outer_dart() == Dart{2, 1});
  auto e = parse_error("p dpp 3 3 1\ne 1 2\ne 2 3\ne 1 3\nrot 1 2 2 3\nrot 2 2 3 1\nt 1 3\n");
  CHECK(std::string(e.what()).find("rotation of vertex 3") != std::string::npos);
  e = parse_error("p dpp 3 2 1\ne 1 2\ne 2 3\nouter 1 3\nt 1 3\n");
  CHECK(std::string(e.what()).find("outer dart") != std::string::npos);
}

TEST_CASE("solutions") {
  Solution s{true, {{1, 2}}};
  CHECK(write_solution(s) == "s dpp yes\npath 1 1 2\n");
  CHECK(write_solution(Solution{}) == "s dpp no\n");
  Solution two{true, {{1, 2, 3}, {4, 5}}};
  CHECK(write_solution(two) == "s dpp yes\npath 1 1 2 3\npath 2 4 5\n");
  CHECK(parse_solution(write_solution(two)) == two);
  CHECK(parse_solution("s dpp no\n") == Solution{});
  CHECK_THROWS_AS(parse_solution("s dpp yes\npath 2 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_solution("s dpp no\npath 1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_solution("s dpp maybe\n"), ParseError);
}

TEST_CASE("grid generator") {
  CHECK(write_instance(gen_grid_instance(6, 2, 7)) == write_instance(gen_grid_instance(6, 2, 7)));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto small = gen_grid_instance(2, 1, seed);
    CHECK(small.graph.num_vertices() == 4);
    CHECK(small.pairs[0].first != small.pairs[0].second);
  }
  auto inst = gen_grid_instance(10, 3, 1);
  std::set<Vertex> ts;
  for (Vertex v : inst.terminals()) {
    ts.insert(v);
    CHECK(inst.graph.degree(v) < 4);  // on the outer cycle
  }
  CHECK(ts.size() == 6u);
  CHECK_THROWS_AS(gen_grid_instance(2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_grid_instance(1, 1, 0), std::invalid_argument);
}

TEST_CASE("random planar generator") {
  auto k4 = gen_random_planar(4, 6, 1, 3);
  CHECK(k4.graph.num_edges() == 6);
  for (Vertex v = 1; v <= 4; ++v) CHECK(k4.graph.degree(v) == 3);

  auto tree = gen_random_planar(5, 4, 2, 1);
  CHECK(tree.graph.num_edges() == 4);
  CHECK(tree.graph.num_components() == 1);
  CHECK(tree.graph.num_faces() == 1);  // acyclic
  CHECK(tree.k() == 2);

  CHECK_THROWS_AS(gen_random_planar(3, 7, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_planar(6, 4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_planar(4, 5, 3, 1), std::invalid_argument);
}

TEST_CASE("generated instances are valid and round trip") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 4 + seed % 12;
    int m = n - 1 + static_cast<int>(seed * 7 % (2 * n - 4));
    int k = 1 + seed % (n / 2);
    auto inst = gen_random_planar(n, m, k, seed);
    CHECK(inst.graph.num_edges() == m);
    CHECK(inst.graph.num_components() == 1);
    CHECK(satisfies_euler(inst.graph));
    CHECK_NOTHROW(check_terminals(inst.graph, inst.pairs));
    auto text = write_instance(inst);
    CHECK(text == write_instance(gen_random_planar(n, m, k, seed)));
    CHECK(same_instance(parse_instance(text), inst));
  }
}
