#include <algorithm>
#include <map>
#include <set>

#include "pdpp/reroute.hpp"

namespace pdpp {

namespace {

// I_{i,j} as index ranges on X_i and on Z_j.
struct Block {
  int x_lo = -1, x_hi = -1, z_lo = -1, z_hi = -1;
};

void append(std::vector<Vertex>& out, const std::vector<Vertex>& part) {
  for (Vertex v : part)
    if (out.empty() || out.back() != v) out.push_back(v);
}

std::vector<Vertex> slice(const std::vector<Vertex>& p, int a, int b) {
  std::vector<Vertex> s;
  if (a <= b)
    for (int i = a; i <= b; ++i) s.push_back(p[i]);
  else
    for (int i = a; i >= b; --i) s.push_back(p[i]);
  return s;
}

}  // namespace

ImproveResult improve_over_tilted_grid(const PlaneGraph& g, const Linkage& l, const TiltedGrid& u) {
  ImproveResult res;
  auto fail = [&](std::string s) {
    res.failure = "NO_IMPROVEMENT: " + std::move(s);
    return res;
  };
  int k = static_cast<int>(l.paths.size());
  int m = u.capacity();
  if (k >= 31 || m <= (1 << k)) return fail("capacity " + std::to_string(m) + " does not exceed 2^" + std::to_string(k));
  if (auto v = verify_tilted_grid(g, u); !v.ok) return fail("not a tilted grid: " + v.violation);
  if (auto v = is_tidy(g, u, l); !v.ok) return fail("grid is not tidy: " + v.violation);

  std::set<Edge> zedges;
  for (const auto& z : u.Z)
    for (size_t i = 0; i + 1 < z.size(); ++i) zedges.insert(make_edge(z[i], z[i + 1]));
  auto count_z = [&](const Linkage& x) {
    int c = 0;
    for (auto e : x.edges()) c += zedges.count(e) > 0;
    return c;
  };
  res.z_edges_before = count_z(l);

  std::vector<std::vector<Block>> I(m, std::vector<Block>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::map<Vertex, int> zpos;
      for (int t = 0; t < static_cast<int>(u.Z[j].size()); ++t) zpos[u.Z[j][t]] = t;
      Block& b = I[i][j];
      for (int t = 0; t < static_cast<int>(u.X[i].size()); ++t)
        if (auto it = zpos.find(u.X[i][t]); it != zpos.end()) {
          if (b.x_lo < 0) b.x_lo = t;
          b.x_hi = t;
          b.z_lo = b.z_lo < 0 ? it->second : std::min(b.z_lo, it->second);
          b.z_hi = std::max(b.z_hi, it->second);
        }
      if (b.x_lo < 0) return fail("empty intersection");
    }

  DiskRegion disk = closed_interior(g, tilted_grid_perimeter(u));
  auto un = untangle_disk(g, l, disk, k);
  if (!un.result) return fail(un.failure);
  const Untangled& nt = *un.result;

  // boundary points of the representation grid
  std::map<Vertex, BoundaryLabel> label;
  for (int j = 0; j < m; ++j) {
    label[u.Z[j].front()] = {Rim::Up, j + 1};
    label[u.Z[j].back()] = {Rim::Down, j + 1};
  }
  BoundaryPattern h{m, {}};
  for (auto [a, b] : nt.lines) {
    if (!label.count(a) || !label.count(b)) return fail("a line end is not a grid corner of Z");
    h.edges.push_back({label[a], label[b]});
  }
  auto routed = route_partial(m, h);
  if (!routed.model) return fail("routing: " + routed.failure);

  // lift one representation path; it starts at host vertex s and ends at t
  auto lift = [&](const std::vector<Vertex>& rep, Vertex s, Vertex t) {
    auto rc = [&](Vertex v) { return std::pair<int, int>{(v - 1) / m, (v - 1) % m}; };
    std::vector<Vertex> out{s};
    // cur is a Z_j position inside the current block
    auto [r0, c0] = rc(rep.front());
    int cur_z = static_cast<int>(std::find(u.Z[c0].begin(), u.Z[c0].end(), s) - u.Z[c0].begin());
    auto xpos = [&](int i, Vertex v) {
      return static_cast<int>(std::find(u.X[i].begin(), u.X[i].end(), v) - u.X[i].begin());
    };
    for (size_t step = 0; step + 1 < rep.size(); ++step) {
      auto [r, c] = rc(rep[step]);
      auto [r2, c2] = rc(rep[step + 1]);
      const Block& b = I[r][c];
      const Block& b2 = I[r2][c2];
      if (r == r2) {
        // leave the block along X_r
        int xin = xpos(r, u.Z[c][cur_z]);
        int xout = c2 > c ? b.x_hi : b.x_lo;
        append(out, slice(u.X[r], xin, xout));
        int xnext = c2 > c ? b2.x_lo : b2.x_hi;
        append(out, slice(u.X[r], xout, xnext));
        Vertex entry = u.X[r][xnext];
        cur_z = static_cast<int>(std::find(u.Z[c2].begin(), u.Z[c2].end(), entry) - u.Z[c2].begin());
      } else {
        int zout = r2 > r ? b.z_hi : b.z_lo;
        append(out, slice(u.Z[c], cur_z, zout));
        int znext = r2 > r ? b2.z_lo : b2.z_hi;
        append(out, slice(u.Z[c], zout, znext));
        cur_z = znext;
      }
    }
    auto [rl, cl] = rc(rep.back());
    int tz = static_cast<int>(std::find(u.Z[cl].begin(), u.Z[cl].end(), t) - u.Z[cl].begin());
    append(out, slice(u.Z[cl], cur_z, tz));
    (void)rl;
    return out;
  };
  std::vector<std::vector<Vertex>> lifted;
  for (size_t e = 0; e < nt.lines.size(); ++e) {
    // the model keeps the edge order of h; its path runs from the
    // normalised first end, so orient it by the host end it starts at
    const auto& rep = routed.model->phi1[e];
    auto [a, b] = nt.lines[e];
    auto host_of = [&](Vertex repv) {
      int row = (repv - 1) / m, col = (repv - 1) % m;
      return row == 0 ? u.Z[col].front() : u.Z[col].back();
    };
    Vertex s = host_of(rep.front()), t = host_of(rep.back());
    auto p = lift(rep, s, t);
    if (p.front() != a) std::reverse(p.begin(), p.end());
    if (p.front() != a || p.back() != b) return fail("lifted line has the wrong ends");
    lifted.push_back(std::move(p));
  }

  Linkage out;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> p{l.paths[i].front()};
    for (int x : nt.order[i]) {
      auto part = x >= 0 ? nt.outside[x] : lifted[~x];
      if (part.front() != p.back()) std::reverse(part.begin(), part.end());
      if (part.front() != p.back()) return fail("pieces do not chain");
      append(p, part);
    }
    out.paths.push_back(std::move(p));
  }
  if (auto v = verify_linkage(g, out); !v.ok) return fail("result is not a linkage: " + v.violation);
  if (!equivalent(l, out)) return fail("result changes the pattern");
  res.z_edges_after = count_z(out);
  if (res.z_edges_after >= res.z_edges_before) return fail("Z edges did not decrease");
  res.linkage = std::move(out);
  return res;
}

}  // namespace pdpp
