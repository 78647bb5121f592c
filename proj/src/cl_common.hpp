#pragma once

// Shared helpers for the configuration analyses. Not installed.

#include <numeric>
#include <vector>

#include "pdpp/clconfig.hpp"

namespace pdpp::detail {

using Where = DiskRegion::Where;

// Element e of a path with vertices p: even e is vertex p[e/2], odd e is the
// edge p[e/2] p[e/2+1].
inline int num_elements(const std::vector<Vertex>& p) { return p.empty() ? 0 : 2 * static_cast<int>(p.size()) - 1; }

inline Where where_element(const DiskRegion& d, const std::vector<Vertex>& p, int e) {
  if (e % 2 == 0) return d.where_vertex(p[e / 2]);
  return d.where_edge(p[e / 2], p[e / 2 + 1]);
}

// Maximal runs [from, to] of elements satisfying pred, over elements lo..hi.
template <class Pred>
std::vector<std::pair<int, int>> runs(int lo, int hi, Pred pred) {
  std::vector<std::pair<int, int>> out;
  for (int e = lo; e <= hi; ++e) {
    if (!pred(e)) continue;
    int s = e;
    while (e + 1 <= hi && pred(e + 1)) ++e;
    out.push_back({s, e});
  }
  return out;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Faces inside d grouped across edges for which cut(edge index) is false.
std::vector<int> face_components(const PlaneGraph& g, const DiskRegion& d, const std::vector<char>& cut);

// Any face strictly inside d.
int some_inside_face(const PlaneGraph& g, const DiskRegion& d);

// Position of each vertex on a cycle, -1 elsewhere.
std::vector<int> cycle_positions(const PlaneGraph& g, const Cycle& c);

}  // namespace pdpp::detail
