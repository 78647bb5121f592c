#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pdpp/decomposition.hpp"
#include "pdpp/instance.hpp"

using namespace pdpp;

namespace {

PlaneGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
  return embed(n, es);
}

PlaneGraph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (int v = 2; v <= n; ++v) es.push_back(make_edge(static_cast<int>(rng() % (v - 1)) + 1, v));
  return embed(n, es);
}

int ceil_three_halves(int w) { return (3 * w + 1) / 2; }

}  // namespace

TEST_CASE("verify rejects broken decompositions") {
  auto g = make_grid(3, 3);
  auto td = min_fill_tree_decomposition(g);
  CHECK(verify_tree_decomposition(g, td).ok);
  auto bd = bd_from_td(g, td);
  CHECK(verify_branch_decomposition(g, bd).ok);

  auto wrong = bd;
  wrong.width += 1;
  auto r = verify_branch_decomposition(g, wrong);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("declared width") != std::string::npos);

  auto td2 = td;
  td2.width += 1;
  CHECK_FALSE(verify_tree_decomposition(g, td2).ok);

  // drop 5 from every bag: its edges are no longer covered
  auto td3 = td;
  for (auto& b : td3.bags) std::erase(b, 5);
  td3.width = -1;
  for (auto& b : td3.bags) td3.width = std::max(td3.width, (int)b.size() - 1);
  CHECK_FALSE(verify_tree_decomposition(g, td3).ok);

  // two bags holding 1 with a gap between them
  TreeDecomposition gap;
  auto p = path_graph(3);
  gap.bags = {{1, 2}, {2, 3}, {1}};
  gap.parent = {-1, 0, 1};
  gap.width = 1;
  auto rg = verify_tree_decomposition(p, gap);
  CHECK_FALSE(rg.ok);
  CHECK(rg.violation.find("not connected") != std::string::npos);

  // leaf edge swapped for a non-edge
  auto bad = bd;
  for (int t = 0; t < bad.num_nodes(); ++t)
    if (bad.is_leaf(t)) {
      bad.leaf_edge[t] = {1, 9};
      break;
    }
  CHECK_FALSE(verify_branch_decomposition(g, bad).ok);
}

TEST_CASE("exact branchwidth of small grids") {
  for (int k = 2; k <= 4; ++k) {
    auto g = make_grid(k, k);
    auto bd = exact_branch_decomposition(g, k + 1);
    REQUIRE(bd);
    CHECK(verify_branch_decomposition(g, *bd).ok);
    CHECK(bd->width == k);
    CHECK_FALSE(exact_branch_decomposition(g, k - 1));
  }
  // independent check where the naive recursion is affordable
  CHECK(testing::naive_branchwidth(make_grid(2, 2)) == 2);
  CHECK(testing::naive_branchwidth(make_grid(3, 3)) == 3);
  // 4x4: exact treewidth 4 forces bw >= ceil(2 * 5 / 3) = 4
  auto td = exact_tree_decomposition(make_grid(4, 4));
  CHECK(td.width == 4);
}

TEST_CASE("exact widths agree with naive recursions") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    int n = 4 + static_cast<int>(rng() % 5);
    int maxm = std::min(3 * n - 6, 12);
    int m = n - 1 + static_cast<int>(rng() % (maxm - n + 2));
    auto inst = gen_random_planar(n, m, 1, rng());
    auto& g = inst.graph;
    auto bd = exact_branch_decomposition(g, 8);
    REQUIRE(bd);
    CHECK(verify_branch_decomposition(g, *bd).ok);
    CHECK(bd->width == testing::naive_branchwidth(g));
    auto td = exact_tree_decomposition(g);
    CHECK(verify_tree_decomposition(g, td).ok);
    CHECK(td.width == testing::naive_treewidth(g));
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("width sandwich on the corpus") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    int n = 6 + static_cast<int>(rng() % 7);
    int m = n - 1 + static_cast<int>(rng() % (2 * n - 4));
    auto g = gen_random_planar(n, m, 1, rng()).graph;
    auto bd = exact_branch_decomposition(g, 12);
    REQUIRE(bd);
    int bw = bd->width;
    int tw = exact_tree_decomposition(g).width;
    CAPTURE(n);
    CAPTURE(m);
    CHECK(bw <= tw + 1);
    CHECK(tw + 1 <= std::max(1, ceil_three_halves(bw)));
  }
}

TEST_CASE("td_from_bd bag bound") {
  SUBCASE("single edge") {
    auto g = path_graph(2);
    auto bd = exact_branch_decomposition(g, 2);
    REQUIRE(bd);
    auto td = td_from_bd(g, *bd);
    CHECK(verify_tree_decomposition(g, td).ok);
    REQUIRE(td.num_nodes() == 1);
    CHECK(td.bags[0] == std::vector<Vertex>{1, 2});
  }
  SUBCASE("width two") {
    auto g = make_grid(2, 4);
    auto bd = exact_branch_decomposition(g, 4);
    REQUIRE(bd);
    CHECK(bd->width == 2);
    auto td = td_from_bd(g, *bd);
    CHECK(verify_tree_decomposition(g, td).ok);
    CHECK(td.width <= 2);
  }
  SUBCASE("4x4 grid") {
    auto g = make_grid(4, 4);
    auto bd = exact_branch_decomposition(g, 4);
    REQUIRE(bd);
    auto td = td_from_bd(g, *bd);
    CHECK(verify_tree_decomposition(g, td).ok);
    CHECK(td.width <= 5);
  }
  SUBCASE("random graphs and isolated vertices") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 30; ++it) {
      auto g = gen_random_planar(12, 11 + static_cast<int>(rng() % 15), 1, rng()).graph;
      g = g.without_vertex(1 + static_cast<int>(rng() % 12));
      auto bd = bd_from_td(g, min_fill_tree_decomposition(g));
      REQUIRE(verify_branch_decomposition(g, bd).ok);
      auto td = td_from_bd(g, bd);
      CHECK(verify_tree_decomposition(g, td).ok);
      CHECK(td.width <= std::max(0, ceil_three_halves(bd.width) - 1));
    }
  }
}

TEST_CASE("heuristic decompositions verify") {
  for (int k : {3, 6, 10}) {
    auto g = make_grid(k, k);
    auto td = min_fill_tree_decomposition(g);
    CHECK(verify_tree_decomposition(g, td).ok);
    auto bd = bd_from_td(g, td);
    CHECK(verify_branch_decomposition(g, bd).ok);
    CHECK(bd.width <= td.width + 1);
    CHECK(bd.width >= k);
  }
  // edgeless graph
  auto empty = embed(3, {});
  auto bd = bd_from_td(empty, min_fill_tree_decomposition(empty));
  CHECK(bd.num_nodes() == 0);
  CHECK(verify_branch_decomposition(empty, bd).ok);
  CHECK(verify_tree_decomposition(empty, td_from_bd(empty, bd)).ok);
}

TEST_CASE("branch_decompose either/or") {
  SUBCASE("trees") {
    for (std::uint64_t s = 1; s <= 10; ++s) {
      auto g = random_tree(5 + static_cast<int>(s * 3), s);
      auto r = branch_decompose(g, 2);
      REQUIRE(r.status == DecomposeStatus::Ok);
      CHECK(verify_branch_decomposition(g, r.bd).ok);
      CHECK(r.bd.width <= 2);
    }
  }
  SUBCASE("4x4 grid, target 10") {
    auto g = make_grid(4, 4);
    auto r = branch_decompose(g, 10);
    REQUIRE(r.status == DecomposeStatus::Ok);
    CHECK(verify_branch_decomposition(g, r.bd).ok);
    CHECK(r.bd.width >= 4);
    CHECK(r.bd.width <= 10);
    CHECK(r.factor == doctest::Approx(5.0));
  }
  SUBCASE("8x8 grid, target 2") {
    auto g = make_grid(8, 8);
    auto r = branch_decompose(g, 2);
    REQUIRE(r.status == DecomposeStatus::TooWide);
    REQUIRE(r.witness);
    CHECK(r.witness->rows == 3);
    CHECK(verify_minor_model(g, *r.witness).ok);
  }
  SUBCASE("epsilon sets the factor") {
    auto r = branch_decompose(make_grid(3, 3), 3, 0.5);
    CHECK(r.factor == doctest::Approx(7.0));
    CHECK_THROWS_AS(branch_decompose(make_grid(3, 3), 3, 0.0), std::invalid_argument);
  }
}

TEST_CASE("grid minors") {
  SUBCASE("identity on the same grid") {
    auto g = make_grid(4, 4);
    auto r = find_grid_minor(g, 4);
    REQUIRE(r.model);
    auto id = identity_model(4, 4);
    CHECK(r.model->phi == id.phi);
  }
  SUBCASE("tree has none") {
    auto r = find_grid_minor(random_tree(15, 4), 2);
    CHECK_FALSE(r.model);
    CHECK(r.exhaustive);
  }
  SUBCASE("9x9 contracts to 3x3 blocks") {
    auto g = make_grid(9, 9);
    auto r = find_grid_minor(g, 3);
    REQUIRE(r.model);
    CHECK(r.method == "blocks");
    CHECK(verify_minor_model(g, *r.model).ok);
    for (auto& s : r.model->phi) CHECK(s.size() == 9);
  }
  SUBCASE("forbidden vertices push the search to rings") {
    auto g = make_grid(12, 12);
    std::vector<Vertex> forb;
    for (int c = 0; c < 12; c += 3) forb.push_back(grid_vertex(0, c, 12));
    forb.push_back(grid_vertex(6, 6, 12));
    GridMinorOptions opt;
    opt.forbidden = forb;
    auto r = find_grid_minor(g, 4, opt);
    REQUIRE(r.model);
    CHECK(verify_minor_model(g, *r.model).ok);
    for (auto& s : r.model->phi)
      for (Vertex v : s) CHECK(std::find(forb.begin(), forb.end(), v) == forb.end());
  }
  SUBCASE("damaged grid") {
    auto g = make_grid(20, 20);
    std::mt19937_64 rng(5);
    std::vector<Vertex> gone;
    for (int i = 0; i < 40; ++i) gone.push_back(1 + static_cast<int>(rng() % 400));
    auto h = g.without_vertices(gone);
    auto r = find_grid_minor(h, 5);
    REQUIRE(r.model);
    CHECK(verify_minor_model(h, *r.model).ok);
  }
  SUBCASE("2x2 minors match long cycles") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 40; ++it) {
      int n = 4 + static_cast<int>(rng() % 6);
      int m = n - 1 + static_cast<int>(rng() % 3);
      auto g = gen_random_planar(n, m, 1, rng()).graph;
      auto r = find_grid_minor(g, 2);
      CHECK(r.model.has_value() == testing::has_long_cycle(g));
      if (r.model) CHECK(verify_minor_model(g, *r.model).ok);
    }
  }
  SUBCASE("exhaustive search on small graphs") {
    // 3x3 grid with the top row's edges subdivided
    std::vector<Edge> es;
    auto base = make_grid(3, 3);
    for (auto e : base.edges())
      if (!(e.u <= 3 && e.v <= 3)) es.push_back(e);
    es.push_back({1, 10});
    es.push_back({2, 10});
    es.push_back({2, 11});
    es.push_back({3, 11});
    auto sub = embed(11, es);
    auto r = find_grid_minor(sub, 3);
    REQUIRE(r.model);
    CHECK(verify_minor_model(sub, *r.model).ok);
    // a long cycle has treewidth 2, so no 3x3 grid
    std::vector<Edge> ring;
    for (int i = 1; i <= 12; ++i) ring.push_back(make_edge(i, i % 12 + 1));
    auto c = find_grid_minor(embed(12, ring), 3);
    CHECK_FALSE(c.model);
    CHECK(c.exhaustive);
    auto k = find_grid_minor(make_grid(3, 4), 4);
    CHECK_FALSE(k.model);
    CHECK(k.exhaustive);
  }
}

TEST_CASE("decomposition text form") {
  auto g = make_grid(2, 2);
  auto bd = exact_branch_decomposition(g, 3);
  REQUIRE(bd);
  auto text = write_decomposition(g, *bd);
  int leaves = 0, nodes = 0, arcs = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("leaf ", 0) == 0) ++leaves;
    if (line.rfind("node ", 0) == 0) ++nodes;
    if (line.rfind("tree ", 0) == 0) ++arcs;
  }
  CHECK(leaves == 4);
  CHECK(nodes == 2);
  CHECK(arcs == 5);
  auto td = td_from_bd(g, *bd);
  auto t2 = write_decomposition(td);
  CHECK(t2.rfind("node 0 bag", 0) == 0);
}
