#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "pdpp/decomposition.hpp"

namespace pdpp {

namespace {

using Mask = std::uint64_t;

struct EdgeSets {
  const PlaneGraph& g;
  int m;
  std::vector<Mask> inc;  // edges at v

  explicit EdgeSets(const PlaneGraph& graph) : g(graph), m(graph.num_edges()), inc(graph.num_vertices() + 1, 0) {
    for (int i = 0; i < m; ++i) {
      inc[g.edges()[i].u] |= Mask{1} << i;
      inc[g.edges()[i].v] |= Mask{1} << i;
    }
  }
  Mask all() const { return m == 64 ? ~Mask{0} : (Mask{1} << m) - 1; }
  int mid_size(Mask x) const {
    Mask rest = all() & ~x;
    int k = 0;
    for (Vertex v = 1; v <= g.num_vertices(); ++v)
      if ((inc[v] & x) && (inc[v] & rest)) ++k;
    return k;
  }
};

struct Search {
  const EdgeSets& es;
  int w;
  long long budget;
  long long work = 0;
  bool out_of_budget = false;
  std::unordered_set<Mask> good;
  std::unordered_map<Mask, Mask> split;  // feasible set -> one part (0 for singletons)

  bool spend(long long c) {
    work += c;
    if (work > budget) out_of_budget = true;
    return !out_of_budget;
  }

  // Every edge set whose middle set lies inside M is a union of classes of
  // edges glued at vertices outside M.
  void collect_for(const std::vector<Vertex>& M) {
    int n = es.g.num_vertices();
    std::vector<char> inM(n + 1, 0);
    for (Vertex v : M) inM[v] = 1;
    std::vector<int> uf(es.m);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (Vertex v = 1; v <= n; ++v) {
      if (inM[v]) continue;
      int first = -1;
      for (Mask b = es.inc[v]; b; b &= b - 1) {
        int e = std::countr_zero(b);
        if (first < 0)
          first = e;
        else
          uf[find(e)] = find(first);
      }
    }
    std::unordered_map<int, Mask> cls;
    for (int e = 0; e < es.m; ++e) cls[find(e)] |= Mask{1} << e;
    std::vector<Mask> units;
    for (auto& [_, mk] : cls) units.push_back(mk);
    int u = static_cast<int>(units.size());
    if (u >= 40 || !spend(1LL << std::min(u, 39))) {
      out_of_budget = true;
      return;
    }
    for (Mask pick = 1; pick < (Mask{1} << u); ++pick) {
      Mask x = 0;
      for (Mask b = pick; b; b &= b - 1) x |= units[std::countr_zero(b)];
      if (!good.count(x) && es.mid_size(x) <= w) good.insert(x);
    }
  }

  void subsets(const std::vector<Vertex>& pool, size_t from, std::vector<Vertex>& cur) {
    if (out_of_budget) return;
    collect_for(cur);
    if (static_cast<int>(cur.size()) == w) return;
    for (size_t i = from; i < pool.size() && !out_of_budget; ++i) {
      cur.push_back(pool[i]);
      subsets(pool, i + 1, cur);
      cur.pop_back();
    }
  }

  bool run() {
    std::vector<Vertex> pool;
    for (Vertex v = 1; v <= es.g.num_vertices(); ++v)
      if (es.g.degree(v) > 0) pool.push_back(v);
    std::vector<Vertex> cur;
    subsets(pool, 0, cur);
    if (out_of_budget) return false;
    std::vector<Mask> order(good.begin(), good.end());
    std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::vector<Mask>> by_low(es.m);
    for (Mask x : order) {
      if (std::popcount(x) == 1) {
        split[x] = 0;
        by_low[std::countr_zero(x)].push_back(x);
        continue;
      }
      int low = std::countr_zero(x);
      auto& cand = by_low[low];
      if (!spend(static_cast<long long>(cand.size()))) return false;
      for (Mask y : cand) {
        if (y == x || (y & ~x)) continue;
        if (split.count(x ^ y)) {
          split[x] = y;
          by_low[low].push_back(x);
          break;
        }
      }
    }
    return split.count(es.all()) > 0;
  }
};

// Rooted binary tree from the recorded splits, then the root is smoothed.
BranchDecomposition assemble(const PlaneGraph& g, const std::unordered_map<Mask, Mask>& split, Mask all) {
  BranchDecomposition bd;
  auto build = [&](auto&& self, Mask x) -> int {
    int id = static_cast<int>(bd.adj.size());
    bd.adj.emplace_back();
    bd.leaf_edge.emplace_back();
    Mask y = split.at(x);
    if (y == 0) {
      bd.leaf_edge[id] = g.edges()[std::countr_zero(x)];
      return id;
    }
    for (Mask part : {y, x ^ y}) {
      int c = self(self, part);
      bd.adj[id].push_back(c);
      bd.adj[c].push_back(id);
    }
    return id;
  };
  build(build, all);
  // node 0 is the root with two children
  int a = bd.adj[0][0], b = bd.adj[0][1];
  std::replace(bd.adj[a].begin(), bd.adj[a].end(), 0, b);
  std::replace(bd.adj[b].begin(), bd.adj[b].end(), 0, a);
  int last = bd.num_nodes() - 1;
  // move the last node into slot 0
  if (last != 0) {
    bd.adj[0] = bd.adj[last];
    bd.leaf_edge[0] = bd.leaf_edge[last];
    for (int s : bd.adj[0]) std::replace(bd.adj[s].begin(), bd.adj[s].end(), last, 0);
  }
  bd.adj.pop_back();
  bd.leaf_edge.pop_back();
  bd.width = computed_width(g, bd);
  return bd;
}

}  // namespace

std::optional<BranchDecomposition> exact_branch_decomposition(const PlaneGraph& g, int max_width, long long budget) {
  int m = g.num_edges();
  if (m > 64) throw std::invalid_argument("exact_branch_decomposition: more than 64 edges");
  BranchDecomposition bd;
  if (m == 0) return bd;
  if (m == 1) {
    bd.adj.assign(1, {});
    bd.leaf_edge.assign(1, g.edges()[0]);
    return bd;
  }
  EdgeSets es(g);
  long long left = budget;
  for (int w = 0; w <= max_width; ++w) {
    Search s{es, w, left, 0, false, {}, {}};
    bool ok = s.run();
    if (s.out_of_budget) return std::nullopt;
    left -= s.work;
    if (ok) return assemble(g, s.split, es.all());
  }
  return std::nullopt;
}

TreeDecomposition exact_tree_decomposition(const PlaneGraph& g) {
  int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("exact_tree_decomposition: more than 24 vertices");
  if (n == 0) return td_from_elimination_order(g, {});
  std::vector<std::uint32_t> adj(n, 0);
  for (auto e : g.edges()) {
    adj[e.u - 1] |= 1u << (e.v - 1);
    adj[e.v - 1] |= 1u << (e.u - 1);
  }
  // q(S, v): vertices outside S + v reachable from v through S
  auto q = [&](std::uint32_t S, int v) {
    std::uint32_t reach = 1u << v, frontier = 1u << v, out = 0;
    while (frontier) {
      std::uint32_t nb = 0;
      for (std::uint32_t b = frontier; b; b &= b - 1) nb |= adj[std::countr_zero(b)];
      out |= nb & ~S;
      frontier = nb & S & ~reach;
      reach |= frontier;
    }
    out &= ~(1u << v);
    return std::popcount(out);
  };
  std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::int8_t> tw(static_cast<size_t>(full) + 1, 0);
  std::vector<std::int8_t> last(static_cast<size_t>(full) + 1, -1);
  tw[0] = -1;
  for (std::uint32_t S = 1; S <= full; ++S) {
    int best = 127;
    for (std::uint32_t b = S; b; b &= b - 1) {
      int v = std::countr_zero(b);
      std::uint32_t rest = S & ~(1u << v);
      int val = std::max<int>(tw[rest], q(rest, v));
      if (val < best) {
        best = val;
        last[S] = static_cast<std::int8_t>(v);
      }
    }
    tw[S] = static_cast<std::int8_t>(best);
    if (S == full) break;
  }
  std::vector<Vertex> order;
  for (std::uint32_t S = full; S; S &= ~(1u << last[S])) order.push_back(last[S] + 1);
  std::reverse(order.begin(), order.end());
  return td_from_elimination_order(g, order);
}

}  // namespace pdpp
