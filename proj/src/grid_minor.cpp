#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

#include "pdpp/decomposition.hpp"

namespace pdpp {

namespace {

std::optional<GridMinorModel> accept(const PlaneGraph& g, GridMinorModel m, const std::vector<char>& forbidden) {
  for (auto& s : m.phi) {
    std::sort(s.begin(), s.end());
    for (Vertex v : s)
      if (forbidden[v]) return std::nullopt;
  }
  if (!verify_minor_model(g, m).ok) return std::nullopt;
  return m;
}

// ------------------------------------------------------------ block contraction

std::optional<GridMinorModel> by_blocks(const PlaneGraph& g, int q, const std::vector<char>& forbidden) {
  auto shape = grid_shape(g);
  if (!shape) return std::nullopt;
  auto [rows, cols] = *shape;
  if (rows < q || cols < q) return std::nullopt;
  GridMinorModel m{q, q, std::vector<std::vector<Vertex>>(q * q)};
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.phi[(r * q / rows) * q + c * q / cols].push_back(grid_vertex(r, c, cols));
  return accept(g, std::move(m), forbidden);
}

// ------------------------------------------------------------ grid as a subgraph

std::optional<GridMinorModel> by_subgraph(const PlaneGraph& g, int q, const std::vector<char>& forbidden,
                                          long long budget) {
  int n = g.num_vertices();
  std::vector<Vertex> img(q * q, 0);
  std::vector<char> used(n + 1, 0);
  long long nodes = 0;
  auto need_deg = [&](int i) {
    int r = i / q, c = i % q;
    return (r > 0) + (r < q - 1) + (c > 0) + (c < q - 1);
  };
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == q * q) return true;
    if (++nodes > budget) return false;
    int r = i / q, c = i % q;
    std::vector<Vertex> cand;
    if (c > 0) {
      cand = g.rotation(img[i - 1]);
    } else if (r > 0) {
      cand = g.rotation(img[i - q]);
    } else {
      for (Vertex v = 1; v <= n; ++v) cand.push_back(v);
    }
    std::sort(cand.begin(), cand.end());
    for (Vertex v : cand) {
      if (used[v] || forbidden[v] || g.degree(v) < need_deg(i)) continue;
      if (r > 0 && c > 0 && !g.has_edge(v, img[i - q])) continue;
      img[i] = v;
      used[v] = 1;
      if (place(i + 1)) return true;
      used[v] = 0;
      if (nodes > budget) return false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  GridMinorModel m{q, q, {}};
  for (Vertex v : img) m.phi.push_back({v});
  return accept(g, std::move(m), forbidden);
}

// ------------------------------------------------------------ rings and spokes

// Face of sub holding the corner of big at u just clockwise of neighbour x.
int corner_face(const PlaneGraph& big, const PlaneGraph& sub, Vertex u, Vertex x) {
  auto& rot = big.rotation(u);
  int d = static_cast<int>(rot.size());
  int k = static_cast<int>(std::find(rot.begin(), rot.end(), x) - rot.begin());
  for (int s = 0; s < d; ++s) {
    Vertex a = rot[(k - s + d) % d];
    if (sub.has_edge(u, a)) return sub.face_right(u, a);
  }
  return -1;
}

struct Level {
  PlaneGraph h;
  std::vector<int> outer;  // per component of h, -1 when trivial
};

// Outer face of every component of sub. corners are (u, x) pairs of big known
// to lie in the unbounded region; sources are vertices of that region.
std::vector<int> outer_faces(const PlaneGraph& big, const PlaneGraph& sub,
                             const std::vector<std::pair<Vertex, Vertex>>& corners, const std::vector<Vertex>& sources) {
  int n = big.num_vertices();
  std::vector<int> out(sub.num_components(), -1);
  std::vector<char> done(sub.num_components(), 0);
  for (auto [u, x] : corners) {
    if (sub.degree(u) == 0) continue;
    int c = sub.component_of(u);
    if (done[c]) continue;
    out[c] = corner_face(big, sub, u, x);
    done[c] = 1;
  }
  for (int c = 0; c < sub.num_components(); ++c) {
    if (done[c]) continue;
    Vertex rep = 0;
    for (Vertex v = 1; v <= n && !rep; ++v)
      if (sub.degree(v) > 0 && sub.component_of(v) == c) rep = v;
    if (!rep) continue;
    std::vector<Vertex> from(n + 1, 0);
    std::deque<Vertex> bfs;
    for (Vertex s : sources)
      if (!(sub.degree(s) > 0 && sub.component_of(s) == c) && !from[s]) {
        from[s] = s;
        bfs.push_back(s);
      }
    while (!bfs.empty() && out[c] < 0) {
      Vertex x = bfs.front();
      bfs.pop_front();
      for (Vertex u : big.rotation(x)) {
        if (sub.degree(u) > 0 && sub.component_of(u) == c) {
          out[c] = corner_face(big, sub, u, x);
          break;
        }
        if (!from[u]) {
          from[u] = x;
          bfs.push_back(u);
        }
      }
    }
    if (out[c] < 0) out[c] = sub.outer_face_of_component(c);
  }
  return out;
}

struct Peeling {
  std::vector<Level> levels;
  std::vector<int> depth;
};

Peeling peel(const PlaneGraph& g, const std::vector<char>& forbidden) {
  int n = g.num_vertices();
  Peeling p;
  p.depth.assign(n + 1, -1);
  std::vector<Vertex> gone;
  for (Vertex v = 1; v <= n; ++v)
    if (forbidden[v]) gone.push_back(v);
  PlaneGraph big = g;
  PlaneGraph cur = g.without_vertices(gone);
  std::vector<std::pair<Vertex, Vertex>> corners;
  std::vector<Vertex> sources;
  for (int c = 0; c < g.num_components(); ++c) {
    int f = g.outer_face_of_component(c);
    if (f < 0) continue;
    for (int d : g.face_darts(f)) {
      Dart x = g.dart(d);
      corners.emplace_back(x.from, x.to);
      sources.push_back(x.from);
    }
  }
  int alive = 0;
  for (Vertex v = 1; v <= n; ++v) alive += !forbidden[v];
  for (int level = 0; alive > 0; ++level) {
    auto outer = outer_faces(big, cur, corners, sources);
    std::vector<Vertex> layer;
    for (int c = 0; c < cur.num_components(); ++c)
      if (outer[c] >= 0)
        for (Vertex v : cur.face_vertices(outer[c]))
          if (p.depth[v] < 0) {
            p.depth[v] = level;
            layer.push_back(v);
          }
    for (Vertex v = 1; v <= n; ++v)
      if (!forbidden[v] && p.depth[v] < 0 && cur.degree(v) == 0) {
        p.depth[v] = level;
        layer.push_back(v);
      }
    alive -= static_cast<int>(layer.size());
    p.levels.push_back({cur, outer});
    corners.clear();
    for (Vertex x : layer)
      for (Vertex u : cur.rotation(x)) corners.emplace_back(u, x);
    sources = layer;
    big = cur;
    cur = cur.without_vertices(layer);
  }
  return p;
}

// Cycle of level j enclosing c, oriented with c's side on the right.
std::optional<std::vector<Vertex>> ring_around(const Level& lv, Vertex c) {
  const PlaneGraph& h = lv.h;
  if (h.degree(c) == 0) return std::nullopt;
  int fo = lv.outer[h.component_of(c)];
  std::vector<char> inR(h.num_faces(), 0);
  std::vector<int> stack;
  for (Vertex w : h.rotation(c)) {
    int f = h.face_right(c, w);
    if (f == fo) return std::nullopt;
    if (!inR[f]) {
      inR[f] = 1;
      stack.push_back(f);
    }
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int d : h.face_darts(f)) {
      int f2 = h.face_of_dart(h.twin(d));
      if (f2 == fo || inR[f2]) continue;
      inR[f2] = 1;
      stack.push_back(f2);
    }
  }
  std::map<Vertex, int> out_dart;
  int count = 0;
  for (int d = 0; d < h.num_darts(); ++d) {
    if (!inR[h.face_of_dart(d)] || h.face_of_dart(h.twin(d)) != fo) continue;
    ++count;
    if (!out_dart.emplace(h.dart(d).from, d).second) return std::nullopt;  // pinched
  }
  if (count < 3) return std::nullopt;
  std::vector<Vertex> cyc;
  int d = out_dart.begin()->second;
  for (int i = 0; i < count; ++i) {
    cyc.push_back(h.dart(d).from);
    auto it = out_dart.find(h.dart(d).to);
    if (it == out_dart.end()) return std::nullopt;
    d = it->second;
  }
  if (h.dart(d).from != cyc.front()) return std::nullopt;
  return cyc;
}

// Vertex-disjoint paths, one vertex per ring, from the innermost ring to the
// outermost. rings[0] is the outermost.
std::vector<std::vector<Vertex>> spokes(const PlaneGraph& g, const std::vector<std::vector<Vertex>>& rings, int want) {
  int R = static_cast<int>(rings.size());
  std::map<Vertex, int> id;
  std::vector<Vertex> who;
  std::vector<int> ring_of;
  for (int j = 0; j < R; ++j)
    for (Vertex v : rings[j]) {
      id[v] = static_cast<int>(who.size());
      who.push_back(v);
      ring_of.push_back(j);
    }
  int V = static_cast<int>(who.size());
  int S = 2 * V, T = 2 * V + 1;
  struct Arc {
    int to, cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * V + 2);
  auto add = [&](int a, int b) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, 1});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  for (int i = 0; i < V; ++i) {
    add(2 * i, 2 * i + 1);
    if (ring_of[i] == R - 1) add(S, 2 * i);
    if (ring_of[i] == 0) add(2 * i + 1, T);
    if (ring_of[i] > 0)
      for (Vertex w : g.rotation(who[i])) {
        auto it = id.find(w);
        if (it != id.end() && ring_of[it->second] == ring_of[i] - 1) add(2 * i + 1, 2 * it->second);
      }
  }
  int flow = 0;
  while (flow < want) {
    std::vector<int> via(2 * V + 2, -1);
    std::deque<int> bfs{S};
    via[S] = -2;
    while (!bfs.empty() && via[T] == -1) {
      int x = bfs.front();
      bfs.pop_front();
      for (int a : out[x])
        if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          bfs.push_back(arcs[a].to);
        }
    }
    if (via[T] == -1) break;
    for (int x = T; x != S; x = arcs[via[x] ^ 1].to) {
      arcs[via[x]].cap -= 1;
      arcs[via[x] ^ 1].cap += 1;
    }
    ++flow;
  }
  std::vector<std::vector<Vertex>> paths;
  if (flow < want) return paths;
  for (int a : out[S]) {
    if (arcs[a].cap != 0) continue;  // unused
    std::vector<Vertex> p;
    int x = arcs[a].to;
    while (x != T) {
      p.push_back(who[x / 2]);
      int next = -1;
      for (int b : out[x + 1])
        if ((b & 1) == 0 && arcs[b].cap == 0) next = arcs[b].to;
      x = next;
      if (x < 0) return {};
    }
    paths.push_back(p);
  }
  return paths;
}

std::optional<GridMinorModel> by_rings(const PlaneGraph& g, int q, const std::vector<char>& forbidden,
                                       long long budget) {
  auto pl = peel(g, forbidden);
  std::vector<Vertex> centres;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (pl.depth[v] >= q) centres.push_back(v);
  std::stable_sort(centres.begin(), centres.end(), [&](Vertex a, Vertex b) { return pl.depth[a] > pl.depth[b]; });
  long long work = 0;
  std::map<std::pair<int, std::vector<Vertex>>, bool> tried;
  for (Vertex c : centres) {
    for (int j0 = 0; j0 + q <= pl.depth[c]; ++j0) {
      work += g.num_vertices() * q;
      if (work > budget) return std::nullopt;
      std::vector<std::vector<Vertex>> rings;
      for (int j = j0; j < j0 + q; ++j) {
        auto r = ring_around(pl.levels[j], c);
        if (!r) break;
        rings.push_back(*r);
      }
      if (static_cast<int>(rings.size()) < q) continue;
      if (!tried.emplace(std::make_pair(j0, rings.back()), true).second) continue;
      auto sp = spokes(g, rings, q);
      if (static_cast<int>(sp.size()) < q) continue;
      // spokes run inner to outer; order them along the outer ring
      std::map<Vertex, int> pos0;
      for (int i = 0; i < static_cast<int>(rings[0].size()); ++i) pos0[rings[0][i]] = i;
      std::sort(sp.begin(), sp.end(), [&](auto& a, auto& b) { return pos0[a.back()] < pos0[b.back()]; });
      GridMinorModel m{q, q, std::vector<std::vector<Vertex>>(q * q)};
      for (int row = 0; row < q; ++row) {
        auto& ring = rings[row];
        int L = static_cast<int>(ring.size());
        std::map<Vertex, int> pos;
        for (int i = 0; i < L; ++i) pos[ring[i]] = i;
        for (int col = 0; col < q; ++col) {
          Vertex hub = sp[col][q - 1 - row];
          auto& cell = m.phi[row * q + col];
          cell.push_back(hub);
          if (col == q - 1) continue;
          Vertex stop = sp[col + 1][q - 1 - row];
          for (int i = (pos[hub] + 1) % L; ring[i] != stop; i = (i + 1) % L) cell.push_back(ring[i]);
        }
      }
      if (auto ok = accept(g, std::move(m), forbidden)) return ok;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ exhaustive

struct Exhaustive {
  int q;
  std::vector<std::uint64_t> nb;
  std::uint64_t free_mask;
  long long budget;
  long long nodes = 0;
  bool aborted = false;
  std::vector<std::uint64_t> cell;

  std::uint64_t neighbours(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (std::uint64_t b = s; b; b &= b - 1) out |= nb[std::countr_zero(b)];
    return out & ~s;
  }

  // Placed cells that still wait for a right or lower neighbour need a free
  // vertex next to them.
  bool viable(int placed, std::uint64_t avail) const {
    for (int p = 0; p < placed; ++p) {
      int r = p / q, c = p % q;
      bool waits = (c + 1 < q && p + 1 >= placed) || (r + 1 < q && p + q >= placed);
      if (waits && !(neighbours(cell[p]) & avail)) return false;
    }
    return true;
  }

  bool place(int i, std::uint64_t used) {
    if (i == q * q) return true;
    int r = i / q, c = i % q;
    std::uint64_t avail = free_mask & ~used;
    int rem = q * q - i;
    if (std::popcount(avail) < rem) return false;
    std::uint64_t anchors = c > 0 ? neighbours(cell[i - 1]) & avail : r > 0 ? neighbours(cell[i - q]) & avail : avail;
    std::uint64_t up = (r > 0 && c > 0) ? cell[i - q] : 0;
    int max_size = std::popcount(avail) - (rem - 1);
    std::uint64_t excluded = 0;
    bool found = false;
    // connected sets S containing anchor a, none of the earlier anchors
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t s, std::uint64_t ext,
                                                                                 std::uint64_t x) {
      if (found || aborted) return;
      if (++nodes > budget) {
        aborted = true;
        return;
      }
      if (!up || (neighbours(s) & up)) {
        cell[i] = s;
        if (viable(i + 1, avail & ~s) && place(i + 1, used | s)) {
          found = true;
          return;
        }
        if (found || aborted) return;
      }
      if (std::popcount(s) >= max_size) return;
      while (ext) {
        std::uint64_t w = ext & (~ext + 1);
        ext ^= w;
        std::uint64_t grown = ext | (nb[std::countr_zero(w)] & avail & ~s & ~x & ~ext & ~w);
        grow(s | w, grown, x);
        if (found || aborted) return;
        x |= w;
      }
    };
    for (std::uint64_t b = anchors; b && !found && !aborted; b &= b - 1) {
      std::uint64_t a = b & (~b + 1);
      std::uint64_t x = excluded | a;
      grow(a, nb[std::countr_zero(a)] & avail & ~x, x);
      excluded |= a;
    }
    return found;
  }
};

bool free_part_is_forest(const PlaneGraph& g, const std::vector<char>& forbidden) {
  int n = g.num_vertices();
  std::vector<int> uf(n + 1);
  for (int i = 0; i <= n; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto e : g.edges()) {
    if (forbidden[e.u] || forbidden[e.v]) continue;
    int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    uf[a] = b;
  }
  return true;
}

}  // namespace

GridMinorSearch find_grid_minor(const PlaneGraph& g, int q, const GridMinorOptions& opt) {
  if (q < 1) throw std::invalid_argument("find_grid_minor: q must be at least 1");
  int n = g.num_vertices();
  std::vector<char> forbidden(n + 1, 0);
  for (Vertex v : opt.forbidden)
    if (g.has_vertex(v)) forbidden[v] = 1;
  int free_count = 0;
  for (Vertex v = 1; v <= n; ++v) free_count += !forbidden[v];
  GridMinorSearch res;
  if (free_count < q * q) {
    res.exhaustive = true;
    res.method = "too-few-vertices";
    return res;
  }
  if (q == 1) {
    for (Vertex v = 1; v <= n; ++v)
      if (!forbidden[v]) {
        res.model = GridMinorModel{1, 1, {{v}}};
        res.method = "single-vertex";
        return res;
      }
  }
  if (free_part_is_forest(g, forbidden)) {
    res.exhaustive = true;
    res.method = "forest";
    return res;
  }
  if (auto m = by_blocks(g, q, forbidden)) {
    res.model = m;
    res.method = "blocks";
    return res;
  }
  if (auto m = by_rings(g, q, forbidden, opt.budget)) {
    res.model = m;
    res.method = "rings";
    return res;
  }
  if (auto m = by_subgraph(g, q, forbidden, opt.budget)) {
    res.model = m;
    res.method = "subgraph";
    return res;
  }
  if (free_count <= std::min(opt.exhaustive_limit, 64)) {
    Exhaustive ex{q, {}, 0, opt.budget, 0, false, {}};
    std::vector<Vertex> ids;
    std::vector<int> idx(n + 1, -1);
    for (Vertex v = 1; v <= n; ++v)
      if (!forbidden[v]) {
        idx[v] = static_cast<int>(ids.size());
        ids.push_back(v);
      }
    ex.nb.assign(ids.size(), 0);
    for (size_t i = 0; i < ids.size(); ++i)
      for (Vertex w : g.rotation(ids[i]))
        if (idx[w] >= 0) ex.nb[i] |= std::uint64_t{1} << idx[w];
    ex.free_mask = ids.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ids.size()) - 1;
    ex.cell.assign(q * q, 0);
    bool found = ex.place(0, 0);
    res.method = "exhaustive";
    res.exhaustive = !ex.aborted;
    if (found) {
      GridMinorModel m{q, q, std::vector<std::vector<Vertex>>(q * q)};
      for (int i = 0; i < q * q; ++i)
        for (std::uint64_t b = ex.cell[i]; b; b &= b - 1) m.phi[i].push_back(ids[std::countr_zero(b)]);
      res.model = accept(g, std::move(m), forbidden);
      if (!res.model) res.exhaustive = false;
    }
    return res;
  }
  res.method = "none";
  return res;
}

}  // namespace pdpp
