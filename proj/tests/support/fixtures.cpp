#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "pdpp/oracle.hpp"

namespace pdpp::testing {

PlaneGraph from_drawing(const std::vector<std::pair<double, double>>& xy, const std::vector<Edge>& edges) {
  int n = static_cast<int>(xy.size());
  std::vector<std::vector<Vertex>> rot(n + 1);
  for (auto e : edges) {
    rot[e.u].push_back(e.v);
    rot[e.v].push_back(e.u);
  }
  for (Vertex v = 1; v <= n; ++v) {
    auto [x0, y0] = xy[v - 1];
    auto ang = [&](Vertex w) { return std::atan2(xy[w - 1].second - y0, xy[w - 1].first - x0); };
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return ang(a) > ang(b); });
  }
  // leftmost vertex: the outer face is right of the dart to its lowest-angle neighbour
  Dart outer;
  Vertex left = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (!rot[v].empty() && (left == 0 || xy[v - 1] < xy[left - 1])) left = v;
  if (left) outer = {left, rot[left].back()};
  return PlaneGraph(n, std::move(rot), outer);
}

PolarBuilder::PolarBuilder(int rings, int angles) : rings_(rings), angles_(angles) {
  for (int j = 0; j < rings; ++j)
    for (int a = 0; a < angles; ++a) {
      double t = 2 * std::numbers::pi * a / angles;
      xy_.push_back({(j + 1) * std::cos(t), (j + 1) * std::sin(t)});
    }
  for (int j = 0; j < rings; ++j)
    for (int a = 0; a < angles; ++a) {
      add_edge(at(j, a), at(j, (a + 1) % angles));
      if (j + 1 < rings) add_edge(at(j, a), at(j + 1, a));
    }
}

Vertex PolarBuilder::pendant(int angle) {
  double t = 2 * std::numbers::pi * angle / angles_;
  xy_.push_back({(rings_ + 0.7) * std::cos(t), (rings_ + 0.7) * std::sin(t)});
  Vertex v = static_cast<Vertex>(xy_.size());
  add_edge(at(rings_ - 1, angle), v);
  return v;
}

void PolarBuilder::diagonal(int ring, int angle) { add_edge(at(ring, angle), at(ring + 1, (angle + 1) % angles_)); }

void PolarBuilder::add_edge(Vertex u, Vertex v) { edges_.push_back(make_edge(u, v)); }

PlaneGraph PolarBuilder::build() const { return from_drawing(xy_, edges_); }

Cycle PolarBuilder::ring(int j) const {
  Cycle c;
  for (int a = 0; a < angles_; ++a) c.vertices.push_back(at(j, a));
  return c;
}

std::vector<Vertex> polar_segment_path(PolarBuilder& pb, int r, int ecc, int a, int b) {
  std::vector<Vertex> p{pb.pendant(a)};
  for (int j = r; j > ecc; --j) p.push_back(pb.at(j, a));
  for (int x = a; x <= b; ++x) p.push_back(pb.at(ecc, x));
  for (int j = ecc + 1; j <= r; ++j) p.push_back(pb.at(j, b));
  p.push_back(pb.pendant(b));
  return p;
}

namespace {

// A chord and what sits in its zone; leaf chords hold extremal segments.
struct Node {
  int ecc;
  std::vector<Node> kids;
  int extremal = 0;
};

void lay_out(PolarBuilder& pb, int r, const Node& nd, int& cur, Linkage& l) {
  int a = cur;
  cur += 2;
  for (const auto& k : nd.kids) lay_out(pb, r, k, cur, l);
  for (int e = 0; e < nd.extremal; ++e) {
    l.paths.push_back(polar_segment_path(pb, r, r, cur, cur + 1));
    cur += 3;
  }
  int b = cur;
  cur += 2;
  l.paths.push_back(polar_segment_path(pb, r, nd.ecc, a, b));
}

}  // namespace

Fixture branching_configuration() {
  const int r = 7;
  auto leaf = [](int ecc, int ext) { return Node{ecc, {}, ext}; };
  // root face with three chords
  Node a1{5, {leaf(6, 1), leaf(6, 1)}};
  Node a{3, {Node{4, {a1}}, leaf(6, 2)}};
  Node A{0, {Node{1, {Node{2, {a}}}}}};
  Node B{4, {Node{5, {leaf(6, 1), leaf(6, 1)}}, leaf(6, 2)}};
  Node C{5, {leaf(6, 1), leaf(6, 2)}};
  // count angles first
  int width = 0;
  auto count = [&](auto&& self, const Node& nd) -> int {
    int w = 4 + 3 * nd.extremal;
    for (const auto& k : nd.kids) w += self(self, k);
    return w;
  };
  for (const Node* nd : {&A, &B, &C}) width += count(count, *nd);
  PolarBuilder pb(r + 1, width + 1);
  Fixture fx;
  int cur = 0;
  for (const Node* nd : {&A, &B, &C}) lay_out(pb, r, *nd, cur, fx.q.linkage);
  fx.g = pb.build();
  for (int j = 0; j <= r; ++j) fx.q.cycles.cycles.push_back(pb.ring(j));
  return fx;
}

Fixture zigzag_configuration() {
  PolarBuilder pb(6, 24);
  std::vector<Vertex> p;
  auto go = [&](int ring, int angle) { p.push_back(pb.at(ring, angle)); };
  auto along = [&](int ring, int from, int to) {
    for (int a = from; a != to; a += (to > from ? 1 : -1)) go(ring, a);
    go(ring, to);
  };
  auto radial = [&](int angle, int from, int to) {
    for (int j = from; j != to; j += (to > from ? 1 : -1)) go(j, angle);
    go(to, angle);
  };
  // ecc e spans angles [1 + 2e, 22 - 2e]; joins run along ring 5
  go(5, 0);
  int lo[] = {1, 3, 5, 7, 9}, hi[] = {22, 20, 18, 16, 14};
  for (int e = 0; e <= 4; ++e) {
    bool fwd = e % 2 == 0;
    int a = fwd ? lo[e] : hi[e], b = fwd ? hi[e] : lo[e];
    if (e > 0) along(5, fwd ? lo[e - 1] : hi[e - 1], a);
    else go(5, a);
    radial(a, 4, e);
    along(e, a, b);
    radial(b, e, 5);
    p.pop_back();
    go(5, b);
  }
  // remove the repeated joins
  std::vector<Vertex> q;
  for (Vertex v : p)
    if (q.empty() || q.back() != v) q.push_back(v);
  Fixture fx;
  fx.g = pb.build();
  for (int j = 0; j <= 4; ++j) fx.q.cycles.cycles.push_back(pb.ring(j));
  fx.q.linkage.paths.push_back(q);
  return fx;
}

PolarHost polar_host(int r, int angles, int diagonals, std::uint64_t seed) {
  PolarBuilder pb(r + 2, angles);
  Rng rng(seed);
  std::set<std::pair<int, int>> used;
  for (int d = 0; d < diagonals; ++d) {
    int j = static_cast<int>(rng.below(r + 1)), a = static_cast<int>(rng.below(angles));
    if (used.insert({j, a}).second) pb.diagonal(j, a);
  }
  PolarHost h;
  h.g = pb.build();
  for (int j = 0; j <= r; ++j) h.cycles.cycles.push_back(pb.ring(j));
  h.outer_ring = pb.ring(r + 1).vertices;
  return h;
}

std::optional<Fixture> cheap_configuration(int r, int angles, int diagonals, int paths, std::uint64_t seed) {
  auto h = polar_host(r, angles, diagonals, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto ring = h.outer_ring;
  rng.shuffle(ring);
  DppInstance inst{h.g, {}};
  for (int i = 0; i < paths; ++i) inst.pairs.push_back({ring[2 * i], ring[2 * i + 1]});
  auto sol = solve_bruteforce(inst, 2'000'000);
  if (sol.status != OracleStatus::Yes) return std::nullopt;
  Fixture fx;
  fx.g = h.g;
  fx.q.cycles = tighten(h.g, h.cycles);
  auto best = cheapest_equivalent_linkage(h.g, Linkage{sol.solution.paths}, fx.q.cycles.cycles, 5'000'000);
  if (!best.complete) return std::nullopt;
  fx.q.linkage = best.linkage;
  return fx;
}

}  // namespace pdpp::testing
