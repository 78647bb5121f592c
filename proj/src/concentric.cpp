#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <set>

#include "cl_common.hpp"
#include "pdpp/clconfig.hpp"

namespace pdpp {

namespace detail {

std::vector<int> face_components(const PlaneGraph& g, const DiskRegion& d, const std::vector<char>& cut) {
  UnionFind uf(g.num_faces());
  for (int id = 0; id < g.num_darts(); ++id) {
    Dart x = g.dart(id);
    if (cut[g.edge_index(x.from, x.to)]) continue;
    int f = g.face_of_dart(id), h = g.face_of_dart(g.twin(id));
    if (d.face_inside(f) && d.face_inside(h)) uf.unite(f, h);
  }
  std::vector<int> comp(g.num_faces(), -1);
  for (int f = 0; f < g.num_faces(); ++f)
    if (d.face_inside(f)) comp[f] = uf.find(f);
  return comp;
}

int some_inside_face(const PlaneGraph& g, const DiskRegion& d) {
  for (int f = 0; f < g.num_faces(); ++f)
    if (d.face_inside(f)) return f;
  return -1;
}

std::vector<int> cycle_positions(const PlaneGraph& g, const Cycle& c) {
  std::vector<int> pos(g.num_vertices() + 1, -1);
  for (size_t i = 0; i < c.vertices.size(); ++i) pos[c.vertices[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace detail

using namespace detail;

std::vector<DiskRegion> disc_sequence(const PlaneGraph& g, const ConcentricCycles& cc) {
  std::vector<DiskRegion> out;
  out.reserve(cc.cycles.size());
  for (const auto& c : cc.cycles) out.push_back(closed_interior(g, c));
  return out;
}

Verdict verify_concentric(const PlaneGraph& g, const ConcentricCycles& cc) {
  if (cc.cycles.empty()) return {false, "no cycles"};
  for (size_t i = 0; i < cc.cycles.size(); ++i)
    if (!is_cycle_of(g, cc.cycles[i])) return {false, "C_" + std::to_string(i) + " is not a cycle"};
  auto discs = disc_sequence(g, cc);
  for (size_t i = 0; i + 1 < cc.cycles.size(); ++i)
    for (Vertex v : cc.cycles[i].vertices)
      if (discs[i + 1].where_vertex(v) != Where::Inside)
        return {false, "C_" + std::to_string(i) + " leaves the open interior of D_" + std::to_string(i + 1)};
  return {};
}

int concentric_side_bound(int r, int forbidden) {
  int t = 0;
  while (t * t < forbidden + 1) ++t;
  return 2 * (r + 1) * t;
}

namespace {

// Edges lying in the closed disc d and avoiding the closed disc hole (if any).
std::vector<int> annulus_edges(const PlaneGraph& g, const DiskRegion& d, const DiskRegion* hole) {
  std::vector<int> out;
  for (int i = 0; i < g.num_edges(); ++i) {
    Edge e = g.edges()[i];
    if (!d.contains_edge(e.u, e.v)) continue;
    if (hole && (hole->contains_vertex(e.u) || hole->contains_vertex(e.v))) continue;
    out.push_back(i);
  }
  return out;
}

// Edges crossed by a dual path from a face inside d to the outer face.
std::vector<char> ray(const PlaneGraph& g, const DiskRegion& d, Vertex anchor) {
  int start = some_inside_face(g, d);
  int target = g.outer_face_of_component(g.component_of(anchor));
  std::vector<int> via(g.num_faces(), -2);
  std::deque<int> q{start};
  via[start] = -1;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    if (f == target) break;
    for (int id : g.face_darts(f)) {
      int h = g.face_of_dart(g.twin(id));
      if (via[h] != -2) continue;
      via[h] = id;
      q.push_back(h);
    }
  }
  std::vector<char> crossed(g.num_edges(), 0);
  for (int f = target; via[f] >= 0; f = g.face_of_dart(via[f])) {
    Dart x = g.dart(via[f]);
    crossed[g.edge_index(x.from, x.to)] ^= 1;
  }
  return crossed;
}

// A cycle among the given edges whose crossing count with the ray is odd.
std::optional<Cycle> odd_cycle(const PlaneGraph& g, const std::vector<int>& edges, const std::vector<char>& crossed) {
  int n = g.num_vertices();
  std::vector<std::vector<std::pair<Vertex, int>>> adj(n + 1);  // neighbour, parity
  for (int i : edges) {
    Edge e = g.edges()[i];
    adj[e.u].push_back({e.v, crossed[i]});
    adj[e.v].push_back({e.u, crossed[i]});
  }
  // BFS in the parity cover; state = 2v + parity
  std::vector<int> from(2 * (n + 1), -2);
  for (Vertex s = 1; s <= n; ++s) {
    if (adj[s].empty() || from[2 * s] != -2 || from[2 * s + 1] != -2) continue;
    std::deque<int> q{2 * s};
    from[2 * s] = -1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      Vertex v = x / 2;
      int par = x % 2;
      for (auto [w, c] : adj[v]) {
        int y = 2 * w + (par ^ c);
        if (from[y] != -2) continue;
        from[y] = x;
        q.push_back(y);
      }
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (from[2 * v] == -2 || from[2 * v + 1] == -2) continue;
      // closed walk s -> v (even) -> s via the odd copy
      std::vector<Vertex> a, b;
      for (int x = 2 * v; x >= 0; x = from[x]) a.push_back(x / 2);
      for (int x = 2 * v + 1; x >= 0; x = from[x]) b.push_back(x / 2);
      std::reverse(a.begin(), a.end());  // s .. v
      std::vector<Vertex> walk = a;
      for (size_t i = 1; i < b.size(); ++i) walk.push_back(b[i]);  // v .. s
      // split into simple cycles, keep one with odd parity
      auto parity = [&](Vertex x, Vertex y) { return static_cast<int>(crossed[g.edge_index(x, y)]); };
      std::vector<Vertex> stack;
      std::vector<int> at(n + 1, -1);
      for (Vertex x : walk) {
        if (at[x] >= 0) {
          std::vector<Vertex> cyc(stack.begin() + at[x], stack.end());
          for (size_t i = at[x] + 1; i < stack.size(); ++i) at[stack[i]] = -1;
          stack.resize(at[x] + 1);
          if (cyc.size() >= 3) {
            int p = 0;
            for (size_t i = 0; i < cyc.size(); ++i) p ^= parity(cyc[i], cyc[(i + 1) % cyc.size()]);
            if (p) return Cycle{cyc};
          }
          continue;
        }
        at[x] = static_cast<int>(stack.size());
        stack.push_back(x);
      }
    }
  }
  return std::nullopt;
}

// A cycle among the given edges, if any.
std::optional<Cycle> any_cycle(const PlaneGraph& g, const std::vector<int>& edges) {
  int n = g.num_vertices();
  UnionFind uf(n + 1);
  std::vector<std::vector<Vertex>> forest(n + 1);
  for (int i : edges) {
    Edge e = g.edges()[i];
    if (uf.unite(e.u, e.v)) {
      forest[e.u].push_back(e.v);
      forest[e.v].push_back(e.u);
      continue;
    }
    // path e.v -> e.u in the forest closes the cycle
    std::vector<Vertex> prev(n + 1, 0);
    std::deque<Vertex> q{e.v};
    prev[e.v] = e.v;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex y : forest[x])
        if (!prev[y]) {
          prev[y] = x;
          q.push_back(y);
        }
    }
    Cycle c;
    for (Vertex x = e.u; x != e.v; x = prev[x]) c.vertices.push_back(x);
    c.vertices.push_back(e.v);
    return c;
  }
  return std::nullopt;
}

int cyclomatic(const PlaneGraph& g, const std::vector<int>& edges) {
  UnionFind uf(g.num_vertices() + 1);
  int extra = 0;
  for (int i : edges)
    if (!uf.unite(g.edges()[i].u, g.edges()[i].v)) ++extra;
  return extra;
}

std::vector<int> without(std::vector<int> edges, int drop) {
  edges.erase(std::remove(edges.begin(), edges.end(), drop), edges.end());
  return edges;
}

// A cycle other than C_{i+1} in D_{i+1} \ D_i winding around D_i.
std::optional<Cycle> annulus_shortcut(const PlaneGraph& g, const Cycle& outer, const DiskRegion& d_out,
                                      const DiskRegion& d_in, Vertex anchor) {
  auto edges = annulus_edges(g, d_out, &d_in);
  auto crossed = ray(g, d_in, anchor);
  for (auto e : cycle_edges(outer)) {
    auto c = odd_cycle(g, without(edges, g.edge_index(e.u, e.v)), crossed);
    if (c) return c;
  }
  return std::nullopt;
}

}  // namespace

TightCheck verify_tight(const PlaneGraph& g, const ConcentricCycles& cc) {
  auto ok = verify_concentric(g, cc);
  if (!ok.ok) return {false, ok.violation};
  auto discs = disc_sequence(g, cc);
  if (cyclomatic(g, annulus_edges(g, discs[0], nullptr)) != 1) return {false, "D_0 is not surface minimal"};
  for (int i = 0; i + 1 < static_cast<int>(cc.cycles.size()); ++i)
    if (annulus_shortcut(g, cc.cycles[i + 1], discs[i + 1], discs[i], cc.cycles[i].vertices[0]))
      return {false, "a cycle fits between C_" + std::to_string(i) + " and C_" + std::to_string(i + 1)};
  return {};
}

ConcentricCycles tighten(const PlaneGraph& g, ConcentricCycles cc) {
  if (!verify_concentric(g, cc).ok) throw std::invalid_argument("tighten: cycles are not concentric");
  for (bool changed = true; changed;) {
    changed = false;
    auto discs = disc_sequence(g, cc);
    auto inner = annulus_edges(g, discs[0], nullptr);
    if (cyclomatic(g, inner) > 1) {
      for (auto e : cycle_edges(cc.cycles[0])) {
        auto c = any_cycle(g, without(inner, g.edge_index(e.u, e.v)));
        if (c) {
          cc.cycles[0] = *c;
          changed = true;
          break;
        }
      }
      continue;
    }
    for (int i = 0; i + 1 < static_cast<int>(cc.cycles.size()) && !changed; ++i) {
      auto c = annulus_shortcut(g, cc.cycles[i + 1], discs[i + 1], discs[i], cc.cycles[i].vertices[0]);
      if (c) {
        cc.cycles[i + 1] = *c;
        changed = true;
      }
    }
  }
  return cc;
}

ConcentricResult concentric_from_grid(const PlaneGraph& g, const GridMinorModel& model,
                                      const std::vector<Vertex>& forbidden, int r) {
  ConcentricResult res;
  if (r < 0) throw std::invalid_argument("concentric_from_grid: r must be non-negative");
  int f = static_cast<int>(std::set<Vertex>(forbidden.begin(), forbidden.end()).size());
  res.side_bound = concentric_side_bound(r, f);
  int side = std::min(model.rows, model.cols);
  if (side < res.side_bound) {
    res.failure = "INSUFFICIENT: grid side " + std::to_string(side) + " < " + std::to_string(res.side_bound);
    return res;
  }
  int b = 2 * (r + 1);
  int t = res.side_bound / b;
  for (int a = 0; a < t; ++a)
    for (int c = 0; c < t; ++c) {
      ConcentricCycles cc;
      bool ok = true;
      for (int i = 0; i <= r && ok; ++i) {
        auto cyc = model_ring_cycle(g, model, a * b + (r - i), c * b + (r - i), 2 * (i + 1));
        if (!cyc) ok = false;
        else cc.cycles.push_back(*cyc);
      }
      if (!ok || !verify_concentric(g, cc).ok) continue;
      auto outer = closed_interior(g, cc.cycles.back());
      if (std::any_of(forbidden.begin(), forbidden.end(), [&](Vertex v) { return outer.contains_vertex(v); }))
        continue;
      res.cycles = tighten(g, cc);
      return res;
    }
  res.failure = "no block of the model gives concentric rings avoiding the forbidden vertices";
  return res;
}

Verdict verify_configuration(const PlaneGraph& g, const CLConfiguration& q) {
  auto v = verify_concentric(g, q.cycles);
  if (!v.ok) return v;
  v = verify_linkage(g, q.linkage);
  if (!v.ok) return v;
  auto dr = closed_interior(g, q.cycles.cycles.back());
  for (const auto& p : q.linkage.paths)
    for (Vertex t : {p.front(), p.back()})
      if (dr.contains_vertex(t)) return {false, "terminal " + std::to_string(t) + " lies in D_r"};
  return {};
}

}  // namespace pdpp
