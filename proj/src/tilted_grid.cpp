#include <algorithm>
#include <map>
#include <set>

#include "cl_common.hpp"
#include "pdpp/clconfig.hpp"

namespace pdpp {

using namespace detail;

namespace {

Verdict bad(std::string s) { return {false, std::move(s)}; }

bool is_path(const PlaneGraph& g, const std::vector<Vertex>& p) {
  if (p.empty()) return false;
  std::set<Vertex> seen;
  for (size_t i = 0; i < p.size(); ++i) {
    if (!g.has_vertex(p[i]) || !seen.insert(p[i]).second) return false;
    if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) return false;
  }
  return true;
}

// Positions in a of the vertices shared with b, if they form one contiguous
// block that b also visits contiguously.
std::optional<std::pair<int, int>> shared_block(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::map<Vertex, int> in_b;
  for (size_t i = 0; i < b.size(); ++i) in_b[b[i]] = static_cast<int>(i);
  std::vector<int> pa, pb;
  for (size_t i = 0; i < a.size(); ++i)
    if (in_b.count(a[i])) {
      pa.push_back(static_cast<int>(i));
      pb.push_back(in_b[a[i]]);
    }
  if (pa.empty()) return std::nullopt;
  for (size_t k = 1; k < pa.size(); ++k) {
    if (pa[k] != pa[k - 1] + 1) return std::nullopt;
    if (std::abs(pb[k] - pb[k - 1]) != 1) return std::nullopt;
    if (k >= 2 && (pb[k] - pb[k - 1]) != (pb[k - 1] - pb[k - 2])) return std::nullopt;
  }
  return std::make_pair(pa.front(), pa.back());
}

}  // namespace

Verdict verify_tilted_grid(const PlaneGraph& g, const TiltedGrid& u) {
  int r = u.capacity();
  if (r < 1 || static_cast<int>(u.Z.size()) != r) return bad("X and Z must both hold r >= 1 paths");
  for (const auto* fam : {&u.X, &u.Z}) {
    std::set<Vertex> used;
    for (const auto& p : *fam) {
      if (!is_path(g, p)) return bad("a family member is not a path");
      for (Vertex v : p)
        if (!used.insert(v).second) return bad("paths of one family share a vertex");
    }
  }
  // I[i][j] as position blocks in X_i and Z_j
  std::vector<std::vector<std::pair<int, int>>> inx(r, std::vector<std::pair<int, int>>(r));
  std::vector<std::vector<std::pair<int, int>>> inz(r, std::vector<std::pair<int, int>>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto bx = shared_block(u.X[i], u.Z[j]);
      auto bz = shared_block(u.Z[j], u.X[i]);
      if (!bx || !bz)
        return bad("I_" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " is empty or not a path");
      inx[i][j] = *bx;
      inz[i][j] = *bz;
    }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j + 1 < r; ++j)
      if (inx[i][j].second >= inx[i][j + 1].first) return bad("intersections out of order along X_" + std::to_string(i + 1));
    if (inx[i][0].first != 0 || inx[i][r - 1].second != static_cast<int>(u.X[i].size()) - 1)
      return bad("X_" + std::to_string(i + 1) + " overhangs its first or last intersection");
  }
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i + 1 < r; ++i)
      if (inz[i][j].second >= inz[i + 1][j].first) return bad("intersections out of order along Z_" + std::to_string(j + 1));
    if (inz[0][j].first != 0 || inz[r - 1][j].second != static_cast<int>(u.Z[j].size()) - 1)
      return bad("Z_" + std::to_string(j + 1) + " overhangs its first or last intersection");
  }
  for (auto [i, j] : {std::pair{0, 0}, {0, r - 1}, {r - 1, 0}, {r - 1, r - 1}})
    if (inx[i][j].first != inx[i][j].second) return bad("a corner intersection has an edge");
  return {};
}

Cycle tilted_grid_perimeter(const TiltedGrid& u) {
  int r = u.capacity();
  if (r < 2) throw std::invalid_argument("tilted_grid_perimeter: capacity below 2");
  std::vector<Vertex> w = u.X[0];
  auto zr = u.Z[r - 1];
  w.insert(w.end(), zr.begin() + 1, zr.end());
  auto xr = u.X[r - 1];
  w.insert(w.end(), xr.rbegin() + 1, xr.rend());
  auto z1 = u.Z[0];
  w.insert(w.end(), z1.rbegin() + 1, z1.rend() - 1);
  return Cycle{w};
}

Verdict is_tidy(const PlaneGraph& g, const TiltedGrid& u, const Linkage& l) {
  std::set<Vertex> zv;
  std::set<Edge> ze;
  for (const auto& z : u.Z) {
    zv.insert(z.begin(), z.end());
    for (size_t i = 0; i + 1 < z.size(); ++i) ze.insert(make_edge(z[i], z[i + 1]));
  }
  auto lv = l.vertices();
  auto le = l.edges();
  std::set<Vertex> lvs(lv.begin(), lv.end());
  std::set<Edge> les(le.begin(), le.end());
  for (Vertex v : zv)
    if (!lvs.count(v)) return bad("Z vertex " + std::to_string(v) + " is not on the linkage");
  for (auto e : ze)
    if (!les.count(e)) return bad("Z edge is not on the linkage");
  if (u.capacity() == 1) {
    std::set<Vertex> disc(u.X[0].begin(), u.X[0].end());
    disc.insert(u.Z[0].begin(), u.Z[0].end());
    for (Vertex v : disc)
      if (lvs.count(v) && !zv.count(v)) return bad("linkage vertex " + std::to_string(v) + " on X outside Z");
    return {};
  }
  Cycle per = tilted_grid_perimeter(u);
  if (!is_cycle_of(g, per)) return bad("perimeter is not a cycle");
  auto d = closed_interior(g, per);
  for (Vertex v : lv)
    if (d.contains_vertex(v) && !zv.count(v)) return bad("linkage vertex " + std::to_string(v) + " inside the grid");
  for (auto e : le)
    if (d.contains_edge(e.u, e.v) && !ze.count(e)) return bad("linkage edge inside the grid off Z");
  return {};
}

TiltedGridResult extract_tilted_grid(const PlaneGraph& g, const CLConfiguration& q, const std::vector<int>& cls) {
  TiltedGridResult res;
  auto fail = [&](std::string s) {
    res.failure = std::move(s);
    return res;
  };
  if (cls.empty()) return fail("empty class");
  auto conv = is_convex(g, q);
  if (!conv.convex) return fail("configuration is not convex");
  auto segs = segments(g, q);
  std::vector<int> S = cls;
  for (int s : S)
    if (s < 0 || s >= static_cast<int>(segs.size())) return fail("segment id out of range");
  std::sort(S.begin(), S.end(), [&](int a, int b) { return segs[a].eccentricity < segs[b].eccentricity; });
  for (size_t j = 1; j < S.size(); ++j)
    if (segs[S[j]].eccentricity != segs[S[j - 1]].eccentricity + 1) return fail("eccentricities are not consecutive");
  int m = static_cast<int>(S.size());
  int mh = (m + 1) / 2;
  if (mh == 1) {
    Vertex v = segs[S[0]].front();
    res.grid = TiltedGrid{{{v}}, {{v}}};
    return res;
  }
  int r = q.depth();
  const Cycle& cr = q.cycles.cycles.back();
  auto pos = cycle_positions(g, cr);
  const Segment& s1 = segs[S[0]];
  const Segment& sm = segs[S[mh - 1]];
  // arc from an end of S_1 to an end of S_m' through no other end of the two
  int len = static_cast<int>(cr.vertices.size());
  std::vector<Vertex> arc;
  for (Vertex a : {s1.front(), s1.back()}) {
    for (int dir : {1, -1}) {
      std::vector<Vertex> w{a};
      for (int j = (pos[a] + dir + len) % len;; j = (j + dir + len) % len) {
        Vertex v = cr.vertices[j];
        w.push_back(v);
        if (v == s1.front() || v == s1.back()) break;
        if (v == sm.front() || v == sm.back()) {
          if (arc.empty()) arc = w;
          break;
        }
      }
    }
    if (!arc.empty()) break;
  }
  if (arc.empty()) return fail("no arc joins S_1 and S_m'");
  std::map<Vertex, int> on_arc;
  for (size_t i = 0; i < arc.size(); ++i) on_arc[arc[i]] = static_cast<int>(i);
  // left end of each S_j on the arc, in order
  std::vector<Vertex> start(mh);
  std::vector<std::vector<Vertex>> arm(mh);
  int last = -1;
  for (int j = 0; j < mh; ++j) {
    const Segment& s = segs[S[j]];
    bool f = on_arc.count(s.front()), b = on_arc.count(s.back());
    if (f == b) return fail("a class member does not cross the strip once");
    arm[j] = s.vertices;
    if (b) std::reverse(arm[j].begin(), arm[j].end());
    start[j] = arm[j].front();
    if (on_arc[start[j]] <= last) return fail("class members out of order along the arc");
    last = on_arc[start[j]];
  }
  // ring levels, outermost first
  int lo = sm.eccentricity + 1;
  if (lo + mh - 1 > r) lo = sm.eccentricity;
  if (lo + mh - 1 > r) return fail("not enough cycles above the class");
  std::vector<int> levels;
  for (int i = mh - 1; i >= 0; --i) levels.push_back(lo + i);
  // I_{i,j}: first run of arm j on ring level i
  std::vector<std::vector<std::pair<int, int>>> I(mh, std::vector<std::pair<int, int>>(mh));
  std::vector<std::vector<int>> ring_pos(mh);
  for (int i = 0; i < mh; ++i) {
    ring_pos[i] = cycle_positions(g, q.cycles.cycles[levels[i]]);
    for (int j = 0; j < mh; ++j) {
      int a = 0, n = static_cast<int>(arm[j].size());
      while (a < n && ring_pos[i][arm[j][a]] < 0) ++a;
      if (a == n) return fail("an arm misses a ring");
      int b = a;
      while (b + 1 < n && ring_pos[i][arm[j][b + 1]] >= 0) ++b;
      // the arm bottoms out here; this side of the strip keeps only its first vertex
      if (levels[i] == segs[S[j]].eccentricity) b = a;
      I[i][j] = {a, b};
    }
  }
  TiltedGrid u;
  for (int j = 0; j < mh; ++j)
    u.Z.push_back(std::vector<Vertex>(arm[j].begin() + I[0][j].first, arm[j].begin() + I[mh - 1][j].second + 1));
  std::set<Vertex> lv;
  for (Vertex v : q.linkage.vertices()) lv.insert(v);
  for (int i = 0; i < mh; ++i) {
    const auto& ring = q.cycles.cycles[levels[i]].vertices;
    int rl = static_cast<int>(ring.size());
    std::vector<std::set<Vertex>> block(mh);
    for (int j = 0; j < mh; ++j)
      for (int k = I[i][j].first; k <= I[i][j].second; ++k) block[j].insert(arm[j][k]);
    std::vector<Vertex> best;
    for (int dir : {1, -1}) {
      // start at the end of block 0 facing away from dir
      int p = ring_pos[i][*block[0].begin()];
      while (block[0].count(ring[(p - dir + rl) % rl])) p = (p - dir + rl) % rl;
      std::vector<Vertex> w;
      int next = 0;
      bool ok = true;
      for (int steps = 0; steps < rl; ++steps, p = (p + dir + rl) % rl) {
        Vertex v = ring[p];
        int owner = -1;
        for (int j = 0; j < mh; ++j)
          if (block[j].count(v)) owner = j;
        if (owner < 0 && lv.count(v)) {
          ok = false;
          break;
        }
        if (owner >= 0 && owner != next && owner != next - 1) {
          ok = false;
          break;
        }
        if (owner == next) ++next;
        w.push_back(v);
        if (owner == mh - 1 && !block[mh - 1].count(ring[(p + dir + rl) % rl])) break;
      }
      if (ok && next == mh && (best.empty() || w.size() < best.size())) best = w;
    }
    if (best.empty()) return fail("no ring portion joins the arms on level " + std::to_string(levels[i]));
    u.X.push_back(best);
  }
  auto v = verify_tilted_grid(g, u);
  if (!v.ok) return fail("extracted grid invalid: " + v.violation);
  v = is_tidy(g, u, q.linkage);
  if (!v.ok) return fail("extracted grid not tidy: " + v.violation);
  res.grid = u;
  return res;
}

}  // namespace pdpp
