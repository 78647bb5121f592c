#include "pdpp/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

namespace pdpp {

namespace {

int64_t dart_key(Vertex a, Vertex b, int n) { return static_cast<int64_t>(a) * (n + 1) + b; }

}  // namespace

PlaneGraph::PlaneGraph(int n, std::vector<std::vector<Vertex>> rotation, Dart outer)
    : n_(n), rot_(std::move(rotation)), outer_(outer) {
  if (n < 0) throw EmbeddingError("negative vertex count");
  if (static_cast<int>(rot_.size()) != n + 1) rot_.resize(n + 1);
  build();
}

int PlaneGraph::dart_id(Vertex from, Vertex to) const {
  if (from < 1 || from > n_ || to < 1 || to > n_) return -1;
  const auto& r = rot_[from];
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == to) return offset_[from] + static_cast<int>(i);
  return -1;
}

int PlaneGraph::edge_index(Vertex u, Vertex v) const {
  Edge e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

void PlaneGraph::build() {
  // validate neighbourhoods
  std::unordered_map<int64_t, int> seen;
  for (Vertex v = 1; v <= n_; ++v) {
    for (Vertex w : rot_[v]) {
      if (w < 1 || w > n_) throw EmbeddingError("rotation of " + std::to_string(v) + " names unknown vertex " + std::to_string(w));
      if (w == v) throw EmbeddingError("self loop at " + std::to_string(v));
      if (!seen.emplace(dart_key(v, w, n_), 1).second)
        throw EmbeddingError("repeated neighbour " + std::to_string(w) + " in rotation of " + std::to_string(v));
    }
  }
  for (Vertex v = 1; v <= n_; ++v)
    for (Vertex w : rot_[v])
      if (!seen.count(dart_key(w, v, n_)))
        throw EmbeddingError("rotation is not symmetric at edge " + std::to_string(v) + "-" + std::to_string(w));

  offset_.assign(n_ + 2, 0);
  for (Vertex v = 1; v <= n_; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rot_[v].size());
  int darts = offset_[n_ + 1];
  m_ = darts / 2;
  dart_from_.assign(darts, 0);
  edges_.clear();
  for (Vertex v = 1; v <= n_; ++v)
    for (size_t i = 0; i < rot_[v].size(); ++i) {
      dart_from_[offset_[v] + i] = v;
      if (v < rot_[v][i]) edges_.push_back({v, rot_[v][i]});
    }
  std::sort(edges_.begin(), edges_.end());

  twin_.assign(darts, -1);
  next_.assign(darts, -1);
  for (int d = 0; d < darts; ++d) {
    Dart x = dart(d);
    int back = dart_id(x.to, x.from);
    twin_[d] = back;
    int pos = back - offset_[x.to];
    int deg = degree(x.to);
    next_[d] = offset_[x.to] + (pos + deg - 1) % deg;
  }

  face_of_.assign(darts, -1);
  faces_.clear();
  for (int d = 0; d < darts; ++d) {
    if (face_of_[d] >= 0) continue;
    int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    int x = d;
    while (face_of_[x] < 0) {
      face_of_[x] = f;
      faces_[f].push_back(x);
      x = next_[x];
    }
  }

  // components
  comp_.assign(n_ + 1, -1);
  num_components_ = 0;
  for (Vertex s = 1; s <= n_; ++s) {
    if (comp_[s] >= 0) continue;
    int c = num_components_++;
    std::deque<Vertex> q{s};
    comp_[s] = c;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex w : rot_[v])
        if (comp_[w] < 0) {
          comp_[w] = c;
          q.push_back(w);
        }
    }
  }
  std::vector<int> cn(num_components_, 0), cm(num_components_, 0), cf(num_components_, 0);
  for (Vertex v = 1; v <= n_; ++v) {
    cn[comp_[v]]++;
    cm[comp_[v]] += degree(v);
  }
  for (auto& f : faces_) cf[comp_[dart_from_[f[0]]]]++;
  for (int c = 0; c < num_components_; ++c) {
    cm[c] /= 2;
    if (cm[c] == 0) continue;
    if (cn[c] - cm[c] + cf[c] != 2)
      throw EmbeddingError("rotation system is not a plane embedding (Euler check failed)");
  }

  if (outer_.valid() && dart_id(outer_.from, outer_.to) < 0) outer_ = {};
  comp_outer_face_.assign(num_components_, -1);
  for (int c = 0; c < num_components_; ++c) comp_outer_face_[c] = pick_fallback_outer(c);
  if (outer_.valid()) {
    comp_outer_face_[comp_[outer_.from]] = face_right(outer_.from, outer_.to);
  } else {
    for (Vertex v = 1; v <= n_; ++v)
      if (degree(v) > 0) {
        int f = comp_outer_face_[comp_[v]];
        outer_ = dart(faces_[f][0]);
        break;
      }
  }
}

int PlaneGraph::pick_fallback_outer(int component) const {
  int best = -1;
  for (int f = 0; f < num_faces(); ++f) {
    if (comp_[dart_from_[faces_[f][0]]] != component) continue;
    if (best < 0 || faces_[f].size() > faces_[best].size()) best = f;
  }
  return best;
}

std::vector<Vertex> PlaneGraph::face_vertices(int f) const {
  std::vector<Vertex> out;
  for (int d : faces_[f]) out.push_back(dart_from_[d]);
  return out;
}

int PlaneGraph::euler_face_count() const {
  int nontrivial = 0;
  for (int c = 0; c < num_components_; ++c)
    if (comp_outer_face_[c] >= 0) ++nontrivial;
  return num_faces() - nontrivial + 1;
}

PlaneGraph PlaneGraph::without_vertices(const std::vector<Vertex>& vs) const {
  std::vector<char> gone(n_ + 1, 0);
  for (Vertex v : vs) gone[v] = 1;
  auto rot = rot_;
  for (Vertex v = 1; v <= n_; ++v) {
    if (gone[v]) {
      rot[v].clear();
      continue;
    }
    std::erase_if(rot[v], [&](Vertex w) { return gone[w] != 0; });
  }
  Dart outer = outer_;
  if (outer.valid() && (gone[outer.from] || gone[outer.to])) {
    outer = {};
    int f = outer_face();
    for (int d : faces_[f]) {
      Dart x = dart(d);
      if (!gone[x.from] && !gone[x.to]) {
        outer = x;
        break;
      }
    }
  }
  return PlaneGraph(n_, std::move(rot), outer);
}

PlaneGraph PlaneGraph::without_vertex(Vertex v) const { return without_vertices({v}); }

PlaneGraph PlaneGraph::without_edges(const std::vector<Edge>& es) const {
  std::set<Edge> drop;
  for (auto e : es) drop.insert(make_edge(e.u, e.v));
  auto rot = rot_;
  for (Vertex v = 1; v <= n_; ++v)
    std::erase_if(rot[v], [&](Vertex w) { return drop.count(make_edge(v, w)) > 0; });
  Dart outer = outer_;
  if (outer.valid() && drop.count(make_edge(outer.from, outer.to))) {
    outer = {};
    for (int d : faces_[outer_face()]) {
      Dart x = dart(d);
      if (!drop.count(make_edge(x.from, x.to))) {
        outer = x;
        break;
      }
    }
  }
  return PlaneGraph(n_, std::move(rot), outer);
}

PlaneGraph PlaneGraph::edge_subgraph(const std::vector<Edge>& es) const {
  std::set<Edge> keep;
  for (auto e : es) keep.insert(make_edge(e.u, e.v));
  std::vector<Edge> drop;
  for (auto e : edges_)
    if (!keep.count(e)) drop.push_back(e);
  return without_edges(drop);
}

bool satisfies_euler(const PlaneGraph& g) {
  return g.num_vertices() - g.num_edges() + g.euler_face_count() == 1 + g.num_components();
}

// ---------------------------------------------------------------- cycles

bool is_cycle_of(const PlaneGraph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) return false;
  std::set<Vertex> uniq(vs.begin(), vs.end());
  if (uniq.size() != vs.size()) return false;
  for (size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    if (!g.has_vertex(a) || !g.has_edge(a, b)) return false;
  }
  return true;
}

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  for (size_t i = 0; i < c.vertices.size(); ++i)
    out.push_back(make_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
  return out;
}

Cycle normalize(const Cycle& c) {
  if (c.vertices.empty()) return c;
  auto vs = c.vertices;
  auto it = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), it, vs.end());
  if (vs.size() > 2 && vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
  return {vs};
}

bool DiskRegion::contains_vertex(Vertex v) const {
  auto w = where_vertex(v);
  if (w == Where::On) return closed;
  return (w == Where::Inside) == (side == Side::Interior);
}

DiskRegion::Where DiskRegion::where_edge(Vertex u, Vertex v) const {
  int idx = host_->edge_index(u, v);
  if (idx < 0) return Where::Outside;
  if (cycle_edge_[idx]) return Where::On;
  return face_in_[host_->face_right(u, v)] ? Where::Inside : Where::Outside;
}

bool DiskRegion::contains_edge(Vertex u, Vertex v) const {
  auto w = where_edge(u, v);
  if (w == Where::On) return closed;
  return (w == Where::Inside) == (side == Side::Interior);
}

bool DiskRegion::contains_face(int f) const { return (face_in_[f] != 0) == (side == Side::Interior); }

std::vector<Vertex> DiskRegion::vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v < static_cast<int>(vstate_.size()); ++v)
    if (contains_vertex(v)) out.push_back(v);
  return out;
}

std::vector<Edge> DiskRegion::edges() const {
  std::vector<Edge> out;
  for (auto e : host_->edges())
    if (contains_edge(e.u, e.v)) out.push_back(e);
  return out;
}

int DiskRegion::inside_face_count() const {
  return static_cast<int>(std::count(face_in_.begin(), face_in_.end(), 1));
}

DiskRegion DiskRegion::with(Side s, bool is_closed) const {
  DiskRegion r = *this;
  r.side = s;
  r.closed = is_closed;
  return r;
}

DiskRegion closed_interior(const PlaneGraph& g, const Cycle& c) {
  if (!is_cycle_of(g, c)) throw std::invalid_argument("closed_interior: not a cycle of the graph");
  DiskRegion r;
  r.cycle = c;
  r.host_ = &g;
  r.cycle_edge_.assign(g.num_edges(), 0);
  for (auto e : cycle_edges(c)) r.cycle_edge_[g.edge_index(e.u, e.v)] = 1;
  int comp = g.component_of(c.vertices[0]);
  int of = g.outer_face_of_component(comp);
  std::vector<char> reach(g.num_faces(), 0);
  std::deque<int> q{of};
  reach[of] = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int d : g.face_darts(f)) {
      Dart x = g.dart(d);
      if (r.cycle_edge_[g.edge_index(x.from, x.to)]) continue;
      int h = g.face_of_dart(g.twin(d));
      if (!reach[h]) {
        reach[h] = 1;
        q.push_back(h);
      }
    }
  }
  r.face_in_.assign(g.num_faces(), 0);
  bool any = false;
  for (int f = 0; f < g.num_faces(); ++f) {
    if (g.component_of(g.dart(g.face_darts(f)[0]).from) != comp) continue;
    if (!reach[f]) {
      r.face_in_[f] = 1;
      any = true;
    }
  }
  if (!any) throw EmbeddingError("cycle does not separate the plane; embedding inconsistent");
  r.vstate_.assign(g.num_vertices() + 1, static_cast<char>(DiskRegion::Where::Outside));
  for (Vertex v : c.vertices) r.vstate_[v] = static_cast<char>(DiskRegion::Where::On);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (r.vstate_[v] == static_cast<char>(DiskRegion::Where::On) || g.degree(v) == 0) continue;
    if (g.component_of(v) != comp) continue;
    int f = g.face_right(v, g.rotation(v)[0]);
    if (r.face_in_[f]) r.vstate_[v] = static_cast<char>(DiskRegion::Where::Inside);
  }
  return r;
}

Subgraph subgraph_of_cycle(const Cycle& c) {
  Subgraph s;
  s.vertices = c.vertices;
  std::sort(s.vertices.begin(), s.vertices.end());
  s.edges = cycle_edges(c);
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

Subgraph subgraph_of_path(const std::vector<Vertex>& path) {
  Subgraph s;
  s.vertices = path;
  std::sort(s.vertices.begin(), s.vertices.end());
  for (size_t i = 0; i + 1 < path.size(); ++i) s.edges.push_back(make_edge(path[i], path[i + 1]));
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

Subgraph intersect(const Subgraph& a, const Subgraph& b) {
  Subgraph s;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(s.vertices));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(s.edges));
  return s;
}

// ---------------------------------------------------------------- grids

PlaneGraph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("make_grid: rows and cols must be positive");
  int n = rows * cols;
  std::vector<std::vector<Vertex>> rot(n + 1);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto& nb = rot[grid_vertex(r, c, cols)];
      if (r > 0) nb.push_back(grid_vertex(r - 1, c, cols));
      if (c + 1 < cols) nb.push_back(grid_vertex(r, c + 1, cols));
      if (r + 1 < rows) nb.push_back(grid_vertex(r + 1, c, cols));
      if (c > 0) nb.push_back(grid_vertex(r, c - 1, cols));
    }
  Dart outer;
  if (cols >= 2)
    outer = {grid_vertex(0, 1, cols), grid_vertex(0, 0, cols)};
  else if (rows >= 2)
    outer = {grid_vertex(0, 0, cols), grid_vertex(1, 0, cols)};
  return PlaneGraph(n, std::move(rot), outer);
}

std::optional<std::pair<int, int>> grid_shape(const PlaneGraph& g) {
  int n = g.num_vertices();
  for (int rows = 1; rows <= n; ++rows) {
    if (n % rows) continue;
    int cols = n / rows;
    if (rows * (cols - 1) + cols * (rows - 1) != g.num_edges()) continue;
    bool ok = true;
    for (int r = 0; r < rows && ok; ++r)
      for (int c = 0; c < cols && ok; ++c) {
        Vertex v = grid_vertex(r, c, cols);
        if (c + 1 < cols && !g.has_edge(v, grid_vertex(r, c + 1, cols))) ok = false;
        if (r + 1 < rows && !g.has_edge(v, grid_vertex(r + 1, c, cols))) ok = false;
      }
    if (ok) return std::make_pair(rows, cols);
  }
  return std::nullopt;
}

std::vector<Vertex> grid_corners(const PlaneGraph& g) {
  auto shape = grid_shape(g);
  if (!shape) throw std::invalid_argument("grid_corners: not a grid");
  auto [rows, cols] = *shape;
  std::set<Vertex> s{grid_vertex(0, 0, cols), grid_vertex(0, cols - 1, cols), grid_vertex(rows - 1, 0, cols),
                     grid_vertex(rows - 1, cols - 1, cols)};
  return {s.begin(), s.end()};
}

std::vector<Vertex> centers(const PlaneGraph& g) {
  auto shape = grid_shape(g);
  if (!shape || shape->first < 2 || shape->second < 2)
    throw std::invalid_argument("centers: input is not a grid with at least 2 rows and columns");
  auto dist = bfs_distances(g, grid_corners(g));
  int best = *std::max_element(dist.begin() + 1, dist.end());
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (dist[v] == best) out.push_back(v);
  return out;
}

Cycle grid_ring(int rows, int cols, int d) {
  int top = d, left = d, bottom = rows - 1 - d, right = cols - 1 - d;
  if (bottom <= top || right <= left) throw std::invalid_argument("grid_ring: ring is degenerate");
  Cycle c;
  for (int x = left; x <= right; ++x) c.vertices.push_back(grid_vertex(top, x, cols));
  for (int y = top + 1; y <= bottom; ++y) c.vertices.push_back(grid_vertex(y, right, cols));
  for (int x = right - 1; x >= left; --x) c.vertices.push_back(grid_vertex(bottom, x, cols));
  for (int y = bottom - 1; y > top; --y) c.vertices.push_back(grid_vertex(y, left, cols));
  return c;
}

Cycle grid_outer_cycle(int rows, int cols) { return grid_ring(rows, cols, 0); }

// ---------------------------------------------------------------- minors

ModelCheck verify_minor_model(const PlaneGraph& g, const GridMinorModel& m) {
  auto fail = [](std::string s) { return ModelCheck{false, std::move(s)}; };
  if (m.rows < 1 || m.cols < 1) return fail("empty grid");
  if (static_cast<int>(m.phi.size()) != m.rows * m.cols) return fail("branch set count differs from grid size");
  std::vector<int> owner(g.num_vertices() + 1, -1);
  for (int i = 0; i < static_cast<int>(m.phi.size()); ++i) {
    if (m.phi[i].empty()) return fail("branch set of cell " + std::to_string(i) + " is empty");
    for (Vertex v : m.phi[i]) {
      if (!g.has_vertex(v)) return fail("branch set names unknown vertex " + std::to_string(v));
      if (owner[v] >= 0)
        return fail("disjointness: vertex " + std::to_string(v) + " in cells " + std::to_string(owner[v]) + " and " +
                    std::to_string(i));
      owner[v] = i;
    }
    if (!is_connected_set(g, m.phi[i])) return fail("connectivity: branch set of cell " + std::to_string(i));
  }
  auto adjacent = [&](int a, int b) {
    for (Vertex v : m.phi[a])
      for (Vertex w : g.rotation(v))
        if (owner[w] == b) return true;
    return false;
  };
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      int a = r * m.cols + c;
      if (c + 1 < m.cols && !adjacent(a, a + 1))
        return fail("adjacency: cells (" + std::to_string(r) + "," + std::to_string(c) + ") and right neighbour");
      if (r + 1 < m.rows && !adjacent(a, a + m.cols))
        return fail("adjacency: cells (" + std::to_string(r) + "," + std::to_string(c) + ") and lower neighbour");
    }
  return {};
}

GridMinorModel identity_model(int rows, int cols) {
  GridMinorModel m{rows, cols, {}};
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.phi.push_back({grid_vertex(r, c, cols)});
  return m;
}

GridMinorModel sub_model(const GridMinorModel& m, int top, int left, int rows, int cols) {
  GridMinorModel s{rows, cols, {}};
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) s.phi.push_back(m.at(top + r, left + c));
  return s;
}

std::optional<Cycle> model_ring_cycle(const PlaneGraph& g, const GridMinorModel& m, int top, int left,
                                      int size) {
  if (size < 2 || top < 0 || left < 0 || top + size > m.rows || left + size > m.cols) return std::nullopt;
  std::vector<std::pair<int, int>> cells;
  int b = top + size - 1, rgt = left + size - 1;
  for (int x = left; x <= rgt; ++x) cells.push_back({top, x});
  for (int y = top + 1; y <= b; ++y) cells.push_back({y, rgt});
  for (int x = rgt - 1; x >= left; --x) cells.push_back({b, x});
  for (int y = b - 1; y > top; --y) cells.push_back({y, left});
  int k = static_cast<int>(cells.size());
  // link edges between consecutive cells
  std::vector<std::pair<Vertex, Vertex>> link(k);
  for (int i = 0; i < k; ++i) {
    const auto& A = m.at(cells[i].first, cells[i].second);
    const auto& B = m.at(cells[(i + 1) % k].first, cells[(i + 1) % k].second);
    std::set<Vertex> inB(B.begin(), B.end());
    std::optional<std::pair<Vertex, Vertex>> best;
    for (Vertex x : A)
      for (Vertex y : g.rotation(x))
        if (inB.count(y) && (!best || std::make_pair(x, y) < *best)) best = std::make_pair(x, y);
    if (!best) return std::nullopt;
    link[i] = *best;
  }
  Cycle c;
  for (int i = 0; i < k; ++i) {
    Vertex entry = link[(i + k - 1) % k].second;
    Vertex exit = link[i].first;
    const auto& S = m.at(cells[i].first, cells[i].second);
    std::vector<char> blocked(g.num_vertices() + 1, 1);
    for (Vertex v : S) blocked[v] = 0;
    auto p = shortest_path(g, entry, exit, blocked);
    if (!p) return std::nullopt;
    for (Vertex v : *p) c.vertices.push_back(v);
  }
  if (!is_cycle_of(g, c)) return std::nullopt;
  return c;
}

ModelCheck verify_topological_minor(const PlaneGraph& g, const TopologicalMinorModel& m) {
  auto fail = [](std::string s) { return ModelCheck{false, std::move(s)}; };
  if (static_cast<int>(m.phi0.size()) != m.pattern_vertices) return fail("phi0 size differs from pattern order");
  if (m.phi1.size() != m.pattern_edges.size()) return fail("phi1 size differs from pattern size");
  std::vector<int> branch(g.num_vertices() + 1, -1);
  for (int i = 0; i < m.pattern_vertices; ++i) {
    Vertex v = m.phi0[i];
    if (!g.has_vertex(v)) return fail("phi0 names unknown vertex");
    if (branch[v] >= 0) return fail("phi0 is not injective at vertex " + std::to_string(v));
    branch[v] = i;
  }
  std::vector<int> used(g.num_vertices() + 1, -1);
  for (size_t e = 0; e < m.phi1.size(); ++e) {
    const auto& p = m.phi1[e];
    auto [a, b] = m.pattern_edges[e];
    if (p.empty()) return fail("empty path for pattern edge " + std::to_string(e));
    if (p.front() != m.phi0[a] || p.back() != m.phi0[b])
      return fail("path of pattern edge " + std::to_string(e) + " has wrong endpoints");
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_edge(p[i], p[i + 1]))
        return fail("path of pattern edge " + std::to_string(e) + " uses non-edge " + std::to_string(p[i]) + "-" +
                    std::to_string(p[i + 1]));
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      Vertex v = p[i];
      if (branch[v] >= 0) return fail("path of pattern edge " + std::to_string(e) + " passes branch vertex " + std::to_string(v));
      if (used[v] >= 0)
        return fail("paths of pattern edges " + std::to_string(used[v]) + " and " + std::to_string(e) +
                    " share vertex " + std::to_string(v));
      used[v] = static_cast<int>(e);
    }
  }
  return {};
}

// ---------------------------------------------------------------- helpers

std::vector<int> bfs_distances(const PlaneGraph& g, const std::vector<Vertex>& sources,
                               const std::vector<char>& blocked) {
  std::vector<int> dist(g.num_vertices() + 1, -1);
  std::deque<Vertex> q;
  auto is_blocked = [&](Vertex v) { return !blocked.empty() && blocked[v]; };
  for (Vertex s : sources)
    if (!is_blocked(s) && dist[s] < 0) {
      dist[s] = 0;
      q.push_back(s);
    }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.rotation(v))
      if (dist[w] < 0 && !is_blocked(w)) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

std::optional<std::vector<Vertex>> shortest_path(const PlaneGraph& g, Vertex s, Vertex t,
                                                 const std::vector<char>& blocked) {
  std::vector<Vertex> parent(g.num_vertices() + 1, -1);
  std::deque<Vertex> q{s};
  parent[s] = s;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    if (v == t) break;
    for (Vertex w : g.rotation(v)) {
      if (parent[w] >= 0) continue;
      if (w != t && !blocked.empty() && blocked[w]) continue;
      parent[w] = v;
      q.push_back(w);
    }
  }
  if (parent[t] < 0) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex v = t; v != s; v = parent[v]) path.push_back(v);
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_connected_set(const PlaneGraph& g, const std::vector<Vertex>& vs) {
  if (vs.empty()) return false;
  std::vector<char> in(g.num_vertices() + 1, 0), seen(g.num_vertices() + 1, 0);
  for (Vertex v : vs) in[v] = 1;
  std::deque<Vertex> q{vs[0]};
  seen[vs[0]] = 1;
  size_t count = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    ++count;
    for (Vertex w : g.rotation(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
  }
  std::set<Vertex> uniq(vs.begin(), vs.end());
  return count == uniq.size();
}

}  // namespace pdpp
