#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pdpp/instance.hpp"
#include "pdpp/reroute.hpp"

using namespace pdpp;
using namespace pdpp::testing;

namespace {

BoundaryLabel up(int i) { return {Rim::Up, i}; }
BoundaryLabel down(int i) { return {Rim::Down, i}; }

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Paths of a routing checked from scratch: grid steps, simple, disjoint,
// ends on the prescribed boundary cells.
std::string check_routing(int k, const BoundaryPattern& h, const TopologicalMinorModel& tm) {
  if (tm.phi1.size() != h.edges.size()) return "path count";
  std::set<Vertex> seen;
  auto cell = [&](BoundaryLabel x) { return grid_vertex(x.rim == Rim::Up ? 0 : k - 1, x.index - 1, k); };
  for (size_t e = 0; e < h.edges.size(); ++e) {
    const auto& p = tm.phi1[e];
    std::set<Vertex> ends{p.front(), p.back()};
    if (ends != std::set<Vertex>{cell(h.edges[e].first), cell(h.edges[e].second)}) return "wrong ends";
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 1 || p[i] > k * k) return "off the grid";
      if (!seen.insert(p[i]).second) return "vertex reused";
      if (i + 1 < p.size()) {
        int r = (p[i] - 1) / k, c = (p[i] - 1) % k, r2 = (p[i + 1] - 1) / k, c2 = (p[i + 1] - 1) % k;
        if (std::abs(r - r2) + std::abs(c - c2) != 1) return "not a grid step";
      }
    }
  }
  return "";
}

}  // namespace

TEST_CASE("straight columns") {
  BoundaryPattern h{2, {{up(1), down(1)}, {up(2), down(2)}}};
  auto r = route_pattern(2, h);
  REQUIRE(r.model);
  CHECK(r.model->phi1[0] == std::vector<Vertex>{1, 3});
  CHECK(r.model->phi1[1] == std::vector<Vertex>{2, 4});
}

TEST_CASE("short upper edge is a boundary edge") {
  BoundaryPattern h{2, {{up(1), up(2)}, {down(1), down(2)}}};
  auto r = route_pattern(2, h);
  REQUIRE(r.model);
  CHECK(r.model->phi1[0] == std::vector<Vertex>{1, 2});
  CHECK(r.model->phi1[1] == std::vector<Vertex>{3, 4});
}

TEST_CASE("invalid patterns are rejected with the edge") {
  BoundaryPattern crossing{3, {{up(1), down(2)}, {up(2), down(1)}, {up(3), down(3)}}};
  auto c = check_pattern(crossing);
  CHECK_FALSE(c.ok);
  CHECK(c.edge == 1);
  CHECK_FALSE(route_pattern(3, crossing).model);

  BoundaryPattern even{3, {{up(1), up(3)}, {up(2), down(2)}, {down(1), down(3)}}};
  auto e = check_pattern(even);
  CHECK_FALSE(e.ok);
  CHECK(e.edge == 0);
  CHECK(e.violation.find("even") != std::string::npos);

  BoundaryPattern partial{3, {{up(1), down(1)}}};
  CHECK_FALSE(check_pattern(partial).ok);
  CHECK(check_partial_pattern(partial).ok);

  BoundaryPattern twice{2, {{up(1), down(1)}, {up(1), down(2)}}};
  CHECK_FALSE(check_partial_pattern(twice).ok);
}

TEST_CASE("pattern enumeration matches Catalan numbers") {
  for (int k = 1; k <= 7; ++k) CHECK(static_cast<long long>(all_patterns(k).size()) == catalan(k));
}

TEST_CASE("every pattern routes for sides 2 to 6") {
  int routed = 0;
  for (int k = 2; k <= 6; ++k)
    for (const auto& h : all_patterns(k)) {
      REQUIRE(check_pattern(h).ok);
      auto r = route_pattern(k, h);
      INFO(write_pattern(h), r.failure);
      REQUIRE(r.model);
      CHECK(check_routing(k, h, *r.model) == "");
      // same-side paths stay in their band of q rows
      int q = 0;
      for (auto [a, b] : h.edges) q += a.rim == Rim::Up && b.rim == Rim::Up;
      for (size_t e = 0; e < h.edges.size(); ++e) {
        auto [a, b] = h.edges[e];
        if (a.rim != b.rim) continue;
        for (Vertex v : r.model->phi1[e]) {
          int row = (v - 1) / k;
          if (a.rim == Rim::Up)
            CHECK(row <= q - 1);
          else
            CHECK(row >= k - q);
        }
      }
      ++routed;
    }
  CHECK(routed == 2 + 5 + 14 + 42 + 132);
}

TEST_CASE("partial patterns route when they fit") {
  for (int k = 2; k <= 5; ++k) {
    // all non-crossing partial matchings of the 2k boundary positions
    int n = 2 * k, tried = 0;
    std::vector<std::pair<int, int>> cur;
    std::function<void(int, std::vector<int>)> rec = [&](int p, std::vector<int> open) {
      if (p == n) {
        if (!open.empty()) return;
        BoundaryPattern h{k, {}};
        auto lab = [&](int x) { return x < k ? up(x + 1) : down(2 * k - x); };
        for (auto [a, b] : cur) h.edges.push_back({lab(a), lab(b)});
        if (h.edges.empty()) return;
        REQUIRE(check_partial_pattern(h).ok);
        auto r = route_partial(k, h);
        INFO(write_pattern(h), r.failure);
        REQUIRE(r.model);
        CHECK(check_routing(k, h, *r.model) == "");
        ++tried;
        return;
      }
      rec(p + 1, open);  // p unmatched; must not sit inside an open edge? it may
      auto o2 = open;
      o2.push_back(p);
      rec(p + 1, o2);  // p opens an edge
      if (!open.empty()) {
        auto o3 = open;
        int a = o3.back();
        o3.pop_back();
        cur.push_back({a, p});
        rec(p + 1, o3);
        cur.pop_back();
      }
    };
    rec(0, {});
    CHECK(tried > 0);
  }
}

TEST_CASE("wide mixed pattern") {
  std::vector<std::pair<BoundaryLabel, BoundaryLabel>> es{{up(7), up(10)},  {up(8), up(9)},      {up(13), up(14)},
                                                          {down(1), down(2)}, {down(3), down(4)},  {down(9), down(10)}};
  int ups[] = {1, 2, 3, 4, 5, 6, 11, 12, 15, 16}, downs[] = {5, 6, 7, 8, 11, 12, 13, 14, 15, 16};
  for (int i = 0; i < 10; ++i) es.push_back({up(ups[i]), down(downs[i])});
  BoundaryPattern h{16, es};
  REQUIRE(check_pattern(h).ok);
  CHECK(required_side(h) == 16);
  auto r = route_pattern(16, h);
  REQUIRE(r.model);
  CHECK(r.model->phi1.size() == 16);
  CHECK(check_routing(16, h, *r.model) == "");
  CHECK(verify_topological_minor(make_grid(16, 16), *r.model).ok);
}

TEST_CASE("pattern text round trip") {
  BoundaryPattern h{3, {{up(1), up(2)}, {up(3), down(3)}, {down(1), down(2)}}};
  auto back = parse_pattern(write_pattern(h), 0);
  CHECK(back.k == 3);
  REQUIRE(back.edges.size() == 3);
  CHECK(back.edges[1].first == up(3));
  CHECK(back.edges[1].second == down(3));
  CHECK_THROWS_AS(parse_pattern("up 1 left 2\n", 0), ParseError);
  CHECK(parse_pattern("# c\nup 1 down 1\n", 4).k == 4);
}

namespace {

// 5x5 grid, disc = rows 1..3 framed, one path snaking down, up and down.
struct Snake {
  PlaneGraph g = make_grid(5, 5);
  Linkage l;
  Cycle frame;
};

Snake snake() {
  Snake s;
  auto v = [](int r, int c) { return grid_vertex(r, c, 5); };
  s.l.paths.push_back({v(0, 0), v(0, 1), v(1, 1), v(2, 1), v(3, 1), v(4, 1), v(4, 2), v(3, 2), v(2, 2), v(1, 2),
                       v(0, 2), v(0, 3), v(1, 3), v(2, 3), v(3, 3), v(4, 3), v(4, 4)});
  for (int c = 0; c < 5; ++c) s.frame.vertices.push_back(v(1, c));
  s.frame.vertices.push_back(v(2, 4));
  for (int c = 4; c >= 0; --c) s.frame.vertices.push_back(v(3, c));
  s.frame.vertices.push_back(v(2, 0));
  return s;
}

}  // namespace

TEST_CASE("untangling a snake") {
  auto s = snake();
  REQUIRE(is_cycle_of(s.g, s.frame));
  auto disk = closed_interior(s.g, s.frame);
  auto vc = vertical_crossing(s.g, s.l, disk);
  REQUIRE(vc.ok);
  CHECK(vc.lines.size() == 3);
  auto r = untangle_disk(s.g, s.l, disk, 1);
  INFO(r.failure);
  REQUIRE(r.result);
  CHECK(r.result->lines.size() == 1);
  auto [a, b] = r.result->lines[0];
  CHECK(std::set<Vertex>{a, b} == std::set<Vertex>{grid_vertex(1, 1, 5), grid_vertex(3, 3, 5)});
  CHECK(r.result->outside.size() == 2);
}

TEST_CASE("untangling needs more than 2^k lines") {
  auto g = make_grid(5, 5);
  auto v = [](int r, int c) { return grid_vertex(r, c, 5); };
  Linkage l;
  l.paths.push_back({v(0, 1), v(1, 1), v(2, 1), v(3, 1), v(4, 1), v(4, 2), v(3, 2), v(2, 2), v(1, 2), v(0, 2)});
  auto s = snake();
  auto disk = closed_interior(g, s.frame);
  auto r = untangle_disk(g, l, disk, 1);
  CHECK_FALSE(r.result);
  CHECK(r.failure.find("exceed") != std::string::npos);
}

TEST_CASE("improving a zig-zag over a tilted grid") {
  auto fx = zigzag_configuration();
  REQUIRE(verify_configuration(fx.g, fx.q).ok);
  REQUIRE(is_convex(fx.g, fx.q).convex);
  auto types = segment_types(fx.g, fx.q);
  REQUIRE(types.classes.size() == 1);
  REQUIRE(types.classes[0].size() == 5);
  auto grid = extract_tilted_grid(fx.g, fx.q, types.classes[0]);
  INFO(grid.failure);
  REQUIRE(grid.grid);
  REQUIRE(grid.grid->capacity() == 3);
  auto imp = improve_over_tilted_grid(fx.g, fx.q.linkage, *grid.grid);
  INFO(imp.failure);
  REQUIRE(imp.linkage);
  CHECK(imp.z_edges_after < imp.z_edges_before);
  CHECK(equivalent(*imp.linkage, fx.q.linkage));
  CHECK(verify_linkage(fx.g, *imp.linkage).ok);
  const auto& cyc = fx.q.cycles.cycles;
  CHECK(linkage_cost(*imp.linkage, cyc) < linkage_cost(fx.q.linkage, cyc));

  // two paths need capacity above 4
  Linkage two = fx.q.linkage;
  two.paths.push_back({fx.g.num_vertices() - 1, fx.g.num_vertices()});
  auto no = improve_over_tilted_grid(fx.g, two, *grid.grid);
  CHECK_FALSE(no.linkage);
  CHECK(no.failure.find("NO_IMPROVEMENT") == 0);
}
