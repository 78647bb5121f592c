#include <algorithm>
#include <set>

#include "cl_common.hpp"
#include "pdpp/clconfig.hpp"

namespace pdpp {

using namespace detail;

std::vector<Segment> segments(const PlaneGraph& g, const CLConfiguration& q) {
  auto discs = disc_sequence(g, q.cycles);
  int r = q.depth();
  std::vector<Segment> out;
  for (int pi = 0; pi < static_cast<int>(q.linkage.paths.size()); ++pi) {
    const auto& p = q.linkage.paths[pi];
    int ne = num_elements(p);
    auto in_dr = [&](int e) { return where_element(discs[r], p, e) != Where::Outside; };
    for (auto [s, t] : runs(0, ne - 1, in_dr)) {
      Segment seg;
      seg.path = pi;
      seg.first = s / 2;
      seg.last = t / 2;
      seg.vertices.assign(p.begin() + seg.first, p.begin() + seg.last + 1);
      seg.eccentricity = r;
      for (int i = 0; i <= r; ++i)
        if (std::any_of(seg.vertices.begin(), seg.vertices.end(),
                        [&](Vertex v) { return discs[i].where_vertex(v) == Where::On; })) {
          seg.eccentricity = i;
          break;
        }
      seg.extremal = seg.eccentricity == r;
      seg.chords.assign(r + 1, 0);
      seg.semichords.assign(r + 1, {});
      for (int i = 0; i <= r; ++i) {
        auto ch = runs(s, t, [&](int e) { return where_element(discs[i], p, e) == Where::Inside; });
        seg.chords[i] = static_cast<int>(ch.size());
        if (i == 0) continue;
        for (auto [a, b] : ch) {
          auto semi = runs(a, b, [&](int e) { return where_element(discs[i - 1], p, e) == Where::Outside; });
          seg.semichords[i].push_back(static_cast<int>(semi.size()));
        }
      }
      out.push_back(std::move(seg));
    }
  }
  return out;
}

namespace {

// Face component of a vertex not on the cut, restricted to faces inside d.
int component_at(const PlaneGraph& g, const DiskRegion& d, const std::vector<int>& comp, Vertex v) {
  for (Vertex w : g.rotation(v)) {
    int f = g.face_right(v, w);
    if (d.face_inside(f)) return comp[f];
  }
  return -1;
}

std::vector<char> edge_mask(const PlaneGraph& g, const std::vector<Vertex>& path) {
  std::vector<char> cut(g.num_edges(), 0);
  for (size_t i = 0; i + 1 < path.size(); ++i) cut[g.edge_index(path[i], path[i + 1])] = 1;
  return cut;
}

}  // namespace

ConvexityReport is_convex(const PlaneGraph& g, const CLConfiguration& q) {
  auto segs = segments(g, q);
  auto discs = disc_sequence(g, q.cycles);
  int r = q.depth();
  auto fail = [](int s, int i, const char* clause) { return ConvexityReport{false, s, i, clause}; };
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    const auto& seg = segs[s];
    if (seg.chords[0] > 0) return fail(s, 0, "i");
    for (int i = 1; i <= r; ++i) {
      if (seg.chords[i] > 1) return fail(s, i, "ii.a");
      if (seg.chords[i] == 1 &&
          std::none_of(seg.vertices.begin(), seg.vertices.end(),
                       [&](Vertex v) { return discs[i - 1].where_vertex(v) == Where::On; }))
        return fail(s, i, "ii.b");
      for (int c : seg.semichords[i])
        if (c != 2) return fail(s, i, "ii.c");
    }
  }
  int center = some_inside_face(g, discs[0]);
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    const auto& seg = segs[s];
    if (seg.eccentricity >= r) continue;
    auto comp = face_components(g, discs[r], edge_mask(g, seg.vertices));
    bool found = false;
    for (int t = 0; t < static_cast<int>(segs.size()) && !found; ++t) {
      if (t == s || segs[t].eccentricity != seg.eccentricity + 1) continue;
      int c = component_at(g, discs[r], comp, segs[t].front());
      found = c >= 0 && c != comp[center];
    }
    if (!found) return fail(s, seg.eccentricity, "iii");
  }
  return {};
}

int count_extremal(const PlaneGraph& g, const CLConfiguration& q) {
  auto segs = segments(g, q);
  return static_cast<int>(std::count_if(segs.begin(), segs.end(), [](const Segment& s) { return s.extremal; }));
}

bool is_touch_free(const PlaneGraph& g, const CLConfiguration& q) {
  auto dr = closed_interior(g, q.cycles.cycles.back());
  for (const auto& p : q.linkage.paths) {
    auto on = runs(0, num_elements(p) - 1, [&](int e) { return where_element(dr, p, e) == Where::On; });
    if (on.size() == 1) return false;
  }
  return true;
}

OutStructure out_structure(const PlaneGraph& g, const CLConfiguration& q) {
  OutStructure out;
  auto segs = segments(g, q);
  const Cycle& cr = q.cycles.cycles.back();
  auto dr = closed_interior(g, cr);
  // segments per path in path order
  std::vector<std::vector<int>> by_path(q.linkage.paths.size());
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) by_path[segs[s].path].push_back(s);

  std::vector<char> out_edge(g.num_edges(), 0), ext_edge(g.num_edges(), 0);
  std::vector<char> ext_vertex(g.num_vertices() + 1, 0);
  for (const auto& s : segs)
    if (s.extremal) {
      for (Vertex v : s.vertices) ext_vertex[v] = 1;
      for (size_t i = 0; i + 1 < s.vertices.size(); ++i) ext_edge[g.edge_index(s.vertices[i], s.vertices[i + 1])] = 1;
    }
  for (size_t pi = 0; pi < q.linkage.paths.size(); ++pi) {
    const auto& p = q.linkage.paths[pi];
    const auto& mine = by_path[pi];
    if (mine.empty()) {
      ++out.flying_hairs;
      out.flying.push_back(p.front());
      out.flying.push_back(p.back());
      continue;
    }
    out.hairs += 2;
    out.out_segments += static_cast<int>(mine.size()) - 1;
    auto classify = [&](Vertex t, const Segment& s) { (s.extremal ? out.bouncing : out.invading).push_back(t); };
    classify(p.front(), segs[mine.front()]);
    classify(p.back(), segs[mine.back()]);
    for (size_t k = 0; k + 1 < mine.size(); ++k)
      for (int i = segs[mine[k]].last; i < segs[mine[k + 1]].first; ++i) out_edge[g.edge_index(p[i], p[i + 1])] = 1;
  }
  std::sort(out.flying.begin(), out.flying.end());
  std::sort(out.invading.begin(), out.invading.end());
  std::sort(out.bouncing.begin(), out.bouncing.end());

  // faces of J = C_r plus the linkage outside the open disc
  std::set<Edge> je;
  for (auto e : cycle_edges(cr)) je.insert(make_edge(e.u, e.v));
  for (const auto& p : q.linkage.paths)
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (dr.where_edge(p[i], p[i + 1]) != Where::Inside) je.insert(make_edge(p[i], p[i + 1]));
  PlaneGraph J = g.edge_subgraph(std::vector<Edge>(je.begin(), je.end()));
  int inner = -1;
  {
    Vertex a = cr.vertices[0], b = cr.vertices[1];
    inner = dr.face_inside(g.face_right(a, b)) ? J.face_right(a, b) : J.face_right(b, a);
  }
  int comp = J.component_of(cr.vertices[0]);
  for (int f = 0; f < J.num_faces(); ++f) {
    if (f == inner) continue;
    const auto& darts = J.face_darts(f);
    if (J.component_of(J.dart(darts[0]).from) != comp) continue;
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int id : darts) {
      Dart x = J.dart(id);
      int gi = g.edge_index(x.from, x.to);
      if (out_edge[gi] || ext_edge[gi]) es.push_back(make_edge(x.from, x.to));
      if (ext_vertex[x.from]) vs.push_back(x.from);
    }
    for (auto e : es) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    if (vs.empty()) continue;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    UnionFind uf(g.num_vertices() + 1);
    int parts = static_cast<int>(vs.size());
    for (auto e : es)
      if (uf.unite(e.u, e.v)) --parts;
    if (parts == 1) ++out.caves;
  }
  return out;
}

bool cyclically_connected(const PlaneGraph& g, const std::vector<Edge>& edges) {
  if (edges.empty()) return true;
  std::vector<int> idx(g.num_edges(), -1);
  for (size_t i = 0; i < edges.size(); ++i) {
    int k = g.edge_index(edges[i].u, edges[i].v);
    if (k < 0) throw std::invalid_argument("cyclically_connected: not an edge of the graph");
    idx[k] = static_cast<int>(i);
  }
  UnionFind uf(static_cast<int>(edges.size()));
  for (Vertex x = 1; x <= g.num_vertices(); ++x) {
    const auto& rot = g.rotation(x);
    int d = static_cast<int>(rot.size());
    if (d < 2) continue;
    for (int i = 0; i < d; ++i) {
      int a = idx[g.edge_index(x, rot[i])], b = idx[g.edge_index(x, rot[(i + 1) % d])];
      if (a >= 0 && b >= 0) uf.unite(a, b);
    }
  }
  for (size_t i = 1; i < edges.size(); ++i)
    if (uf.find(static_cast<int>(i)) != uf.find(0)) return false;
  return true;
}

ReducedPair reduced_pair(const PlaneGraph& g, const CLConfiguration& q) {
  int n = g.num_vertices();
  std::set<Edge> on_cycles;
  for (const auto& c : q.cycles.cycles)
    for (auto e : cycle_edges(c)) on_cycles.insert(make_edge(e.u, e.v));
  std::vector<Edge> contract;
  for (auto e : q.linkage.edges())
    if (on_cycles.count(e)) contract.push_back(e);

  std::vector<std::vector<Vertex>> rot(n + 1);
  for (Vertex v = 1; v <= n; ++v) rot[v] = g.rotation(v);
  std::vector<Vertex> image(n + 1);
  for (Vertex v = 0; v <= n; ++v) image[v] = v;
  auto find = [&](Vertex v) {
    while (image[v] != v) v = image[v] = image[image[v]];
    return v;
  };
  // class count of a cycle if u and v were merged
  auto classes_after = [&](const Cycle& c, Vertex u, Vertex v) {
    std::set<Vertex> cls;
    for (Vertex x : c.vertices) {
      Vertex y = find(x);
      cls.insert(y == v ? u : y);
    }
    return cls.size();
  };
  int skipped = 0;
  for (auto e : contract) {
    Vertex u = find(e.u), v = find(e.v);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    auto& ru = rot[u];
    auto& rv = rot[v];
    std::set<Vertex> had(ru.begin(), ru.end());
    // no multigraphs here: a common neighbour or a cycle shrinking below a
    // triangle leaves the edge in place
    bool bad = std::any_of(rv.begin(), rv.end(), [&](Vertex w) { return had.count(w) > 0; });
    for (const auto& c : q.cycles.cycles)
      if (classes_after(c, u, v) < 3) bad = true;
    if (bad) {
      ++skipped;
      continue;
    }
    // splice v's rotation into u's in place of v
    auto pu = std::find(ru.begin(), ru.end(), v) - ru.begin();
    auto pv = std::find(rv.begin(), rv.end(), u) - rv.begin();
    std::vector<Vertex> merged(ru.begin(), ru.begin() + pu);
    int dv = static_cast<int>(rv.size());
    for (int k = 1; k < dv; ++k) {
      Vertex w = rv[(pv + k) % dv];
      *std::find(rot[w].begin(), rot[w].end(), v) = u;
      merged.push_back(w);
    }
    merged.insert(merged.end(), ru.begin() + pu + 1, ru.end());
    ru = std::move(merged);
    rv.clear();
    image[v] = u;
  }
  for (Vertex v = 1; v <= n; ++v) image[v] = find(v);

  // keep an outer dart that survives
  Dart outer;
  int of = g.outer_face();
  if (of >= 0)
    for (int id : g.face_darts(of)) {
      Dart x = g.dart(id);
      Vertex a = image[x.from], b = image[x.to];
      if (a != b && std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end()) {
        outer = {a, b};
        break;
      }
    }
  ReducedPair out{PlaneGraph(n, rot, outer), {}, image, skipped};
  auto squash = [&](const std::vector<Vertex>& vs, bool cyclic) {
    std::vector<Vertex> o;
    for (Vertex v : vs)
      if (o.empty() || o.back() != image[v]) o.push_back(image[v]);
    if (cyclic)
      while (o.size() > 1 && o.back() == o.front()) o.pop_back();
    return o;
  };
  for (const auto& c : q.cycles.cycles) out.config.cycles.cycles.push_back(Cycle{squash(c.vertices, true)});
  for (const auto& p : q.linkage.paths) out.config.linkage.paths.push_back(squash(p, false));
  return out;
}

}  // namespace pdpp
