#include <algorithm>
#include <map>

#include "pdpp/reroute.hpp"

namespace pdpp {

using Where = DiskRegion::Where;

namespace {

// Runs of a path inside the closed disc, as [first, last] vertex positions.
// Single-vertex runs are kept so that callers can reject touches.
std::vector<std::pair<int, int>> closed_runs(const DiskRegion& d, const std::vector<Vertex>& p) {
  std::vector<std::pair<int, int>> runs;
  int n = static_cast<int>(p.size());
  int i = 0;
  while (i < n) {
    if (d.where_vertex(p[i]) == Where::Outside) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && d.where_edge(p[j], p[j + 1]) != Where::Outside) ++j;
    runs.push_back({i, j});
    i = j + 1;
  }
  return runs;
}

}  // namespace

VerticalCrossing vertical_crossing(const PlaneGraph& g, const Linkage& l, const DiskRegion& disk) {
  VerticalCrossing vc;
  auto fail = [&](std::string s) {
    vc.failure = std::move(s);
    vc.lines.clear();
    return vc;
  };
  std::vector<int> pos(g.num_vertices() + 1, -1);
  for (int i = 0; i < static_cast<int>(disk.cycle.vertices.size()); ++i) pos[disk.cycle.vertices[i]] = i;
  std::vector<std::vector<Vertex>> lines;
  for (const auto& p : l.paths)
    for (auto [a, b] : closed_runs(disk, p)) {
      if (a == b) return fail("a path touches the boundary without crossing");
      if (pos[p[a]] < 0 || pos[p[b]] < 0) return fail("a path ends inside the disc");
      lines.emplace_back(p.begin() + a, p.begin() + b + 1);
    }
  int r = static_cast<int>(lines.size());
  if (r == 0) return fail("no line crosses the disc");
  // ends in boundary order, labelled by line
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < r; ++i) {
    ends.push_back({pos[lines[i].front()], i});
    ends.push_back({pos[lines[i].back()], i});
  }
  std::sort(ends.begin(), ends.end());
  int n = 2 * r;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    std::vector<char> seen(r, 0);
    for (int t = 0; t < r && ok; ++t) {
      int a = ends[(s + t) % n].second, b = ends[(s + n - 1 - t) % n].second;
      ok = a == b && !seen[a];
      seen[a] = 1;
    }
    if (!ok) continue;
    for (int t = 0; t < r; ++t) {
      int li = ends[(s + t) % n].second;
      auto line = lines[li];
      if (pos[line.front()] != ends[(s + t) % n].first) std::reverse(line.begin(), line.end());
      vc.lines.push_back(std::move(line));
    }
    vc.ok = true;
    return vc;
  }
  return fail("lines do not cross the disc vertically");
}

namespace {

struct Piece {
  std::vector<Vertex> vs;
  int path = 0;
};

// Depth-first over the paths in order: follow pieces, and at a boundary
// point pick a non-crossing chord to another unused point.
struct Search {
  const std::vector<Piece>* pieces = nullptr;
  std::map<Vertex, int> piece_at_point;  // boundary point -> piece
  std::vector<Vertex> points;            // boundary points
  std::map<Vertex, int> pos;             // position on the boundary cycle
  std::vector<std::pair<Vertex, Vertex>> terms;
  std::vector<int> first_piece;
  std::vector<char> is_terminal;
  long long budget = 0, nodes = 0;
  bool exhausted = false;

  std::vector<std::pair<Vertex, Vertex>> chords;
  std::vector<std::vector<int>> order;
  std::map<Vertex, char> point_used;
  std::vector<char> piece_used;
  int best = 0;
  std::optional<Untangled> found;

  bool crosses(Vertex a, Vertex b) const {
    int x = pos.at(a), y = pos.at(b);
    if (x > y) std::swap(x, y);
    for (auto [c, d] : chords) {
      int u = pos.at(c), v = pos.at(d);
      if (u > v) std::swap(u, v);
      if ((x < u && u < y && y < v) || (u < x && x < v && v < y)) return true;
    }
    return false;
  }

  void walk(int i, int pc, Vertex from) {
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    const auto& vs = (*pieces)[pc].vs;
    Vertex far = vs.front() == from ? vs.back() : vs.front();
    if (far == terms[i].second) {
      next_path(i + 1);
      return;
    }
    if ((is_terminal[far] && far != terms[i].first) || !piece_at_point.count(far)) return;
    if (static_cast<int>(chords.size()) + 1 >= best) return;
    for (Vertex b : points) {
      if (b == far || point_used[b] || point_used[far]) continue;
      int pb = piece_at_point.at(b);
      if (piece_used[pb] || crosses(far, b)) continue;
      point_used[far] = point_used[b] = 1;
      piece_used[pb] = 1;
      chords.push_back({far, b});
      order[i].push_back(~static_cast<int>(chords.size() - 1));
      order[i].push_back(pb);
      walk(i, pb, b);
      order[i].pop_back();
      order[i].pop_back();
      chords.pop_back();
      piece_used[pb] = 0;
      point_used[far] = point_used[b] = 0;
      if (exhausted) return;
    }
  }

  void next_path(int i) {
    if (i == static_cast<int>(terms.size())) {
      if (static_cast<int>(chords.size()) >= best) return;
      best = static_cast<int>(chords.size());
      Untangled u;
      u.lines = chords;
      std::map<int, int> remap;
      for (auto o : order) {
        for (int& x : o) {
          if (x < 0) continue;
          if (!remap.count(x)) {
            remap[x] = static_cast<int>(u.outside.size());
            u.outside.push_back((*pieces)[x].vs);
          }
          x = remap[x];
        }
        u.order.push_back(o);
      }
      found = std::move(u);
      return;
    }
    int pc = first_piece[i];
    piece_used[pc] = 1;
    order[i].push_back(pc);
    walk(i, pc, terms[i].first);
    order[i].pop_back();
    piece_used[pc] = 0;
  }
};

}  // namespace

UntangleResult untangle_disk(const PlaneGraph& g, const Linkage& l, const DiskRegion& disk, int k,
                             long long budget) {
  UntangleResult res;
  if (k != static_cast<int>(l.paths.size())) {
    res.failure = "k differs from the number of paths";
    return res;
  }
  auto vc = vertical_crossing(g, l, disk);
  if (!vc.ok) {
    res.failure = "not a vertical crossing: " + vc.failure;
    return res;
  }
  int r = static_cast<int>(vc.lines.size());
  if (k >= 31 || r <= (1 << k)) {
    res.failure = std::to_string(r) + " lines do not exceed 2^" + std::to_string(k);
    return res;
  }
  // pieces: each path minus the interiors of its lines
  std::vector<Piece> pieces;
  Search s;
  for (int i = 0; i < static_cast<int>(vc.lines.size()); ++i) {
    s.points.push_back(vc.lines[i].front());
    s.points.push_back(vc.lines[i].back());
  }
  for (int i = 0; i < static_cast<int>(disk.cycle.vertices.size()); ++i) s.pos[disk.cycle.vertices[i]] = i;
  s.is_terminal.assign(g.num_vertices() + 1, 0);
  for (int pi = 0; pi < k; ++pi) {
    const auto& p = l.paths[pi];
    s.terms.push_back({p.front(), p.back()});
    s.is_terminal[p.front()] = s.is_terminal[p.back()] = 1;
    s.first_piece.push_back(static_cast<int>(pieces.size()));
    int start = 0;
    for (auto [a, b] : closed_runs(disk, p)) {
      pieces.push_back({std::vector<Vertex>(p.begin() + start, p.begin() + a + 1), pi});
      start = b;
    }
    pieces.push_back({std::vector<Vertex>(p.begin() + start, p.end()), pi});
  }
  // a boundary point closes the piece before its line or opens the one after
  for (int pc = 0; pc < static_cast<int>(pieces.size()); ++pc)
    for (Vertex v : {pieces[pc].vs.front(), pieces[pc].vs.back()})
      if (std::find(s.points.begin(), s.points.end(), v) != s.points.end()) s.piece_at_point[v] = pc;
  s.pieces = &pieces;
  s.budget = budget;
  s.best = r;
  s.order.assign(k, {});
  s.piece_used.assign(pieces.size(), 0);
  s.next_path(0);
  res.nodes = s.nodes;
  if (!s.found) {
    res.failure = s.exhausted ? "CANNOT: search budget exhausted" : "CANNOT: no set of fewer lines works";
    return res;
  }
  res.result = std::move(s.found);
  return res;
}

}  // namespace pdpp
