#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cl_common.hpp"
#include "pdpp/clconfig.hpp"

namespace pdpp {

using namespace detail;

int SegmentTree::leaves() const {
  int k = 0;
  for (int t = 0; t < num_nodes(); ++t)
    if (t != root && children[t].empty()) ++k;
  return k;
}

namespace {

void require_convex(const PlaneGraph& g, const CLConfiguration& q) {
  auto c = is_convex(g, q);
  if (!c.convex)
    throw ConfigurationError("configuration is not convex: segment " + std::to_string(c.segment) + " level " +
                             std::to_string(c.level) + " clause " + c.clause);
}

void compute_metrics(SegmentTree& t) {
  // depth and count of branching vertices along root paths
  std::deque<int> q{t.root};
  std::vector<int> depth(t.num_nodes(), 0), branch(t.num_nodes(), 0);
  branch[t.root] = t.degree(t.root) > 2;
  t.height = 0;
  t.real_height = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (t.children[x].empty()) {
      t.height = std::max(t.height, depth[x]);
      t.real_height = std::max(t.real_height, branch[x] + 1);
    }
    for (int c : t.children[x]) {
      depth[c] = depth[x] + 1;
      branch[c] = branch[x] + (t.degree(c) > 2);
      q.push_back(c);
    }
  }
  t.dilation = 0;
  for (int x = 0; x < t.num_nodes(); ++x) {
    if (x != t.root && t.degree(x) == 2) continue;
    for (int c : t.children[x]) {
      int len = 1;
      while (t.degree(c) == 2) {
        c = t.children[c][0];
        ++len;
      }
      t.dilation = std::max(t.dilation, len);
    }
  }
}

}  // namespace

SegmentTree segment_tree(const PlaneGraph& g, const CLConfiguration& q) {
  require_convex(g, q);
  auto segs = segments(g, q);
  auto discs = disc_sequence(g, q.cycles);
  const auto& dr = discs.back();
  std::vector<char> in_l(g.num_edges(), 0);
  for (auto e : cycle_edges(q.cycles.cycles.back())) in_l[g.edge_index(e.u, e.v)] = 1;
  for (const auto& s : segs)
    for (size_t i = 0; i + 1 < s.vertices.size(); ++i) in_l[g.edge_index(s.vertices[i], s.vertices[i + 1])] = 1;
  auto comp = face_components(g, dr, in_l);
  std::map<int, int> node_of;
  for (int f = 0; f < g.num_faces(); ++f)
    if (comp[f] >= 0 && !node_of.count(comp[f])) node_of.emplace(comp[f], static_cast<int>(node_of.size()));
  int nodes = static_cast<int>(node_of.size());
  auto node = [&](int f) { return node_of.at(comp[f]); };

  std::vector<std::vector<std::pair<int, int>>> adj(nodes);  // neighbour, segment
  int tree_edges = 0;
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    if (segs[s].extremal) continue;
    std::set<std::pair<int, int>> sides;
    const auto& vs = segs[s].vertices;
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
      if (dr.where_edge(vs[i], vs[i + 1]) != Where::Inside) continue;
      int a = node(g.face_right(vs[i], vs[i + 1])), b = node(g.face_right(vs[i + 1], vs[i]));
      if (a != b) sides.insert({std::min(a, b), std::max(a, b)});
    }
    if (sides.size() != 1) throw ConfigurationError("segment " + std::to_string(s) + " does not split one face");
    auto [a, b] = *sides.begin();
    adj[a].push_back({b, s});
    adj[b].push_back({a, s});
    ++tree_edges;
  }
  if (tree_edges != nodes - 1) throw ConfigurationError("inside structure is not a tree");

  SegmentTree t;
  t.root = node(some_inside_face(g, discs[0]));
  t.parent.assign(nodes, -2);
  t.children.assign(nodes, {});
  t.segment.assign(nodes, -1);
  t.parent[t.root] = -1;
  std::deque<int> bfs{t.root};
  int seen = 1;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop_front();
    for (auto [y, s] : adj[x]) {
      if (t.parent[y] != -2) continue;
      t.parent[y] = x;
      t.segment[y] = s;
      t.children[x].push_back(y);
      bfs.push_back(y);
      ++seen;
    }
  }
  if (seen != nodes) throw ConfigurationError("inside structure is not connected");

  std::vector<char> leaf(nodes, 0);
  for (int x = 0; x < nodes; ++x) leaf[x] = t.children[x].empty();
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    if (!segs[s].extremal) continue;
    int f = -1;
    Vertex v = segs[s].front();
    for (Vertex w : g.rotation(v))
      if (dr.face_inside(g.face_right(v, w))) {
        f = g.face_right(v, w);
        break;
      }
    if (f < 0) continue;
    int x = node(f);
    if (!leaf[x]) continue;
    int y = t.num_nodes();
    t.parent.push_back(x);
    t.children.emplace_back();
    t.segment.push_back(s);
    t.children[x].push_back(y);
  }
  compute_metrics(t);
  return t;
}

namespace {

struct Arcs {
  std::vector<Vertex> p, p2;  // closed arcs of C_r, in cycle order
  bool ok = false;
};

// The two arcs of C_r joining an end of a to an end of b and passing no
// other end of a or b.
Arcs arcs_between(const Cycle& cr, const std::vector<int>& pos, const Segment& a, const Segment& b) {
  int len = static_cast<int>(cr.vertices.size());
  std::vector<std::pair<int, int>> ends;  // position, owner
  for (Vertex v : {a.front(), a.back()}) ends.push_back({pos[v], 0});
  for (Vertex v : {b.front(), b.back()}) ends.push_back({pos[v], 1});
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  Arcs out;
  if (std::any_of(ends.begin(), ends.end(), [](auto& e) { return e.first < 0; })) return out;
  int k = static_cast<int>(ends.size());
  int switches = 0;
  for (int i = 0; i < k; ++i) {
    auto [x, ox] = ends[i];
    auto [y, oy] = ends[(i + 1) % k];
    if (ox == oy) continue;
    ++switches;
    std::vector<Vertex> arc;
    for (int j = x;; j = (j + 1) % len) {
      arc.push_back(cr.vertices[j]);
      if (j == y) break;
    }
    (ox == 0 ? out.p : out.p2) = std::move(arc);
  }
  out.ok = switches == 2;
  return out;
}

}  // namespace

bool parallel(const PlaneGraph& g, const CLConfiguration& q, const std::vector<Segment>& segs, int a, int b) {
  if (a == b) return true;
  const Cycle& cr = q.cycles.cycles.back();
  auto pos = cycle_positions(g, cr);
  auto arcs = arcs_between(cr, pos, segs[a], segs[b]);
  if (!arcs.ok) return false;
  // (1), (2): no other segment has both ends on one arc
  for (const auto* arc : {&arcs.p, &arcs.p2}) {
    std::set<Vertex> on(arc->begin(), arc->end());
    for (int s = 0; s < static_cast<int>(segs.size()); ++s)
      if (s != a && s != b && on.count(segs[s].front()) && on.count(segs[s].back())) return false;
  }
  // (3): P from a to b, b, P' from b to a, a
  std::vector<Vertex> walk = arcs.p;
  auto sb = segs[b].vertices;
  if (sb.front() != walk.back()) std::reverse(sb.begin(), sb.end());
  walk.insert(walk.end(), sb.begin() + 1, sb.end());
  if (arcs.p2.front() != walk.back()) return false;
  walk.insert(walk.end(), arcs.p2.begin() + 1, arcs.p2.end());
  auto sa = segs[a].vertices;
  if (sa.front() != walk.back()) std::reverse(sa.begin(), sa.end());
  walk.insert(walk.end(), sa.begin() + 1, sa.end());
  if (walk.front() != walk.back()) return false;
  walk.pop_back();
  Cycle c{walk};
  if (!is_cycle_of(g, c)) return false;
  auto d = closed_interior(g, c);
  auto d0 = closed_interior(g, q.cycles.cycles.front());
  for (int f = 0; f < g.num_faces(); ++f)
    if (d0.face_inside(f) && !d.face_inside(f)) return true;
  return false;
}

SegmentTypes segment_types(const PlaneGraph& g, const CLConfiguration& q) {
  require_convex(g, q);
  auto segs = segments(g, q);
  int n = static_cast<int>(segs.size());
  std::vector<std::vector<char>> par(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) par[a][b] = par[b][a] = parallel(g, q, segs, a, b);
  SegmentTypes out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!par[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (par[b][c] && !par[a][c]) {
          out.transitive = false;
          out.failure = "segments " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                        " break transitivity";
          return out;
        }
    }
  std::vector<int> cls(n, -1);
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = static_cast<int>(out.classes.size());
    out.classes.push_back({});
    for (int b = a; b < n; ++b)
      if (par[a][b]) {
        cls[b] = cls[a];
        out.classes.back().push_back(b);
      }
  }
  return out;
}

}  // namespace pdpp
