#include "pdpp/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

namespace pdpp {

namespace {

DecompositionCheck bad(std::string s) { return {false, std::move(s)}; }

struct Rooted {
  std::vector<int> parent;
  std::vector<int> order;  // BFS order from the root
};

Rooted root_tree(const std::vector<std::vector<int>>& adj, int root) {
  Rooted r;
  int n = static_cast<int>(adj.size());
  r.parent.assign(n, -2);
  if (n == 0) return r;
  r.parent[root] = -1;
  r.order.push_back(root);
  for (size_t i = 0; i < r.order.size(); ++i) {
    int t = r.order[i];
    for (int s : adj[t])
      if (r.parent[s] == -2) {
        r.parent[s] = t;
        r.order.push_back(s);
      }
  }
  return r;
}

// mid[t] for every non-root node t: the middle set of tree edge (t, parent).
std::vector<std::vector<Vertex>> middle_sets(const PlaneGraph& g, const BranchDecomposition& bd,
                                             const Rooted& rt) {
  int N = bd.num_nodes();
  std::vector<std::vector<Vertex>> mid(N);
  std::vector<std::vector<int>> leaves_of(g.num_vertices() + 1);
  for (int t = 0; t < N; ++t)
    if (bd.is_leaf(t)) {
      leaves_of[bd.leaf_edge[t].u].push_back(t);
      leaves_of[bd.leaf_edge[t].v].push_back(t);
    }
  std::vector<int> cnt(N, 0);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    int deg = static_cast<int>(leaves_of[v].size());
    if (deg < 2) continue;
    for (int t : leaves_of[v]) cnt[t] = 1;
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
      int t = *it;
      if (rt.parent[t] < 0) continue;
      if (cnt[t] > 0 && cnt[t] < deg) mid[t].push_back(v);
      cnt[rt.parent[t]] += cnt[t];
    }
    std::fill(cnt.begin(), cnt.end(), 0);
  }
  return mid;
}

// Elimination order to tree decomposition: bag of v is v plus its later
// neighbours in the filled graph, parent is the bag of the earliest of them.
TreeDecomposition td_from_order(const PlaneGraph& g, const std::vector<Vertex>& order) {
  int n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    td.parent.push_back(-1);
    td.width = -1;
    return td;
  }
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::set<Vertex>> adj(n + 1);
  for (auto e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  td.bags.resize(n);
  td.parent.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> later(adj[v].begin(), adj[v].end());
    for (Vertex a : later) {
      adj[a].erase(v);
      for (Vertex b : later)
        if (a != b) adj[a].insert(b);
    }
    auto& bag = td.bags[i];
    bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    if (!later.empty()) {
      int p = n;
      for (Vertex a : later) p = std::min(p, pos[a]);
      td.parent[i] = p;
    }
  }
  // several roots (one per component): hang them under the last one
  td.root = n - 1;
  for (int i = 0; i < n - 1; ++i)
    if (td.parent[i] < 0) td.parent[i] = n - 1;
  td.width = 0;
  for (auto& b : td.bags) td.width = std::max(td.width, static_cast<int>(b.size()) - 1);
  return td;
}

}  // namespace

int computed_width(const PlaneGraph& g, const BranchDecomposition& bd) {
  if (bd.num_nodes() <= 1) return 0;
  auto rt = root_tree(bd.adj, 0);
  auto mid = middle_sets(g, bd, rt);
  int w = 0;
  for (auto& m : mid) w = std::max(w, static_cast<int>(m.size()));
  return w;
}

DecompositionCheck verify_branch_decomposition(const PlaneGraph& g, const BranchDecomposition& bd) {
  int N = bd.num_nodes();
  if (static_cast<int>(bd.leaf_edge.size()) != N) return bad("leaf table size differs from node count");
  int m = g.num_edges();
  if (m == 0) {
    if (N != 0) return bad("edgeless graph needs an empty decomposition");
    if (bd.width != 0) return bad("declared width " + std::to_string(bd.width) + ", computed 0");
    return {};
  }
  long long arcs = 0;
  for (int t = 0; t < N; ++t) {
    for (int s : bd.adj[t]) {
      if (s < 0 || s >= N || s == t) return bad("bad tree arc at node " + std::to_string(t));
      if (std::count(bd.adj[s].begin(), bd.adj[s].end(), t) != 1) return bad("asymmetric tree arc at node " + std::to_string(t));
    }
    arcs += static_cast<long long>(bd.adj[t].size());
  }
  if (arcs != 2LL * (N - 1)) return bad("not a tree: wrong number of tree edges");
  auto rt = root_tree(bd.adj, 0);
  if (static_cast<int>(rt.order.size()) != N) return bad("not a tree: disconnected");
  std::set<Edge> seen;
  for (int t = 0; t < N; ++t) {
    int deg = static_cast<int>(bd.adj[t].size());
    if (bd.is_leaf(t)) {
      if (N > 1 && deg != 1) return bad("leaf " + std::to_string(t) + " has degree " + std::to_string(deg));
      Edge e = bd.leaf_edge[t];
      if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.has_edge(e.u, e.v))
        return bad("leaf " + std::to_string(t) + " names a non-edge");
      if (!seen.insert(make_edge(e.u, e.v)).second) return bad("edge on two leaves");
    } else if (deg != 3) {
      return bad("internal node " + std::to_string(t) + " has degree " + std::to_string(deg));
    }
  }
  if (static_cast<int>(seen.size()) != m) return bad("some edge has no leaf");
  int w = computed_width(g, bd);
  if (w != bd.width) return bad("declared width " + std::to_string(bd.width) + ", computed " + std::to_string(w));
  return {};
}

DecompositionCheck verify_tree_decomposition(const PlaneGraph& g, const TreeDecomposition& td) {
  int N = td.num_nodes();
  int n = g.num_vertices();
  if (static_cast<int>(td.parent.size()) != N) return bad("parent table size differs from node count");
  if (N == 0) return bad("no nodes");
  if (td.root < 0 || td.root >= N || td.parent[td.root] != -1) return bad("bad root");
  std::vector<std::vector<int>> adj(N);
  for (int t = 0; t < N; ++t) {
    if (t == td.root) continue;
    int p = td.parent[t];
    if (p < 0 || p >= N || p == t) return bad("node " + std::to_string(t) + " has bad parent");
    adj[t].push_back(p);
    adj[p].push_back(t);
  }
  if (static_cast<int>(root_tree(adj, td.root).order.size()) != N) return bad("not a tree");
  std::vector<int> count(n + 1, 0);
  int width = -1;
  for (int t = 0; t < N; ++t) {
    auto& b = td.bags[t];
    for (size_t i = 0; i < b.size(); ++i) {
      if (!g.has_vertex(b[i])) return bad("bag " + std::to_string(t) + " names unknown vertex");
      if (i > 0 && b[i - 1] >= b[i]) return bad("bag " + std::to_string(t) + " not sorted or repeats a vertex");
      ++count[b[i]];
    }
    width = std::max(width, static_cast<int>(b.size()) - 1);
  }
  for (Vertex v = 1; v <= n; ++v)
    if (count[v] == 0) return bad("vertex " + std::to_string(v) + " in no bag");
  auto in = [&](int t, Vertex v) { return std::binary_search(td.bags[t].begin(), td.bags[t].end(), v); };
  for (auto e : g.edges()) {
    bool ok = false;
    for (int t = 0; t < N && !ok; ++t) ok = in(t, e.u) && in(t, e.v);
    if (!ok) return bad("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " in no bag");
  }
  // nodes holding v minus tree edges inside them is 1 iff they are connected
  std::vector<int> links(n + 1, 0);
  for (int t = 0; t < N; ++t) {
    if (t == td.root) continue;
    for (Vertex v : td.bags[t])
      if (in(td.parent[t], v)) ++links[v];
  }
  for (Vertex v = 1; v <= n; ++v)
    if (count[v] - links[v] != 1) return bad("bags of vertex " + std::to_string(v) + " are not connected");
  if (width != td.width) return bad("declared width " + std::to_string(td.width) + ", computed " + std::to_string(width));
  return {};
}

TreeDecomposition min_fill_tree_decomposition(const PlaneGraph& g) {
  int n = g.num_vertices();
  std::vector<std::set<Vertex>> adj(n + 1);
  for (auto e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  auto fill = [&](Vertex v) {
    long long f = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++f;
    return f;
  };
  std::vector<long long> fv(n + 1, 0);
  std::vector<char> done(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) fv[v] = fill(v);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (done[v]) continue;
      if (best == 0 || fv[v] < fv[best] || (fv[v] == fv[best] && adj[v].size() < adj[best].size())) best = v;
    }
    order.push_back(best);
    done[best] = 1;
    std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
    for (Vertex a : nb) {
      adj[a].erase(best);
      for (Vertex b : nb)
        if (a != b) adj[a].insert(b);
    }
    adj[best].clear();
    std::set<Vertex> touched(nb.begin(), nb.end());
    for (Vertex a : nb) touched.insert(adj[a].begin(), adj[a].end());
    for (Vertex a : touched) fv[a] = fill(a);
  }
  return td_from_order(g, order);
}

TreeDecomposition td_from_elimination_order(const PlaneGraph& g, const std::vector<Vertex>& order) {
  return td_from_order(g, order);
}

BranchDecomposition bd_from_td(const PlaneGraph& g, const TreeDecomposition& td) {
  BranchDecomposition bd;
  int m = g.num_edges();
  if (m == 0) return bd;
  if (m == 1) {
    bd.adj.assign(1, {});
    bd.leaf_edge.assign(1, g.edges()[0]);
    return bd;
  }
  int T = td.num_nodes();
  std::vector<std::set<int>> adj(T + m);
  std::vector<Edge> leaf(T + m, Edge{});
  for (int t = 0; t < T; ++t)
    if (t != td.root) {
      adj[t].insert(td.parent[t]);
      adj[td.parent[t]].insert(t);
    }
  std::vector<std::vector<int>> holding(g.num_vertices() + 1);
  for (int t = 0; t < T; ++t)
    for (Vertex v : td.bags[t]) holding[v].push_back(t);
  for (int i = 0; i < m; ++i) {
    Edge e = g.edges()[i];
    int home = -1;
    for (int t : holding[e.u])
      if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), e.v)) {
        home = t;
        break;
      }
    if (home < 0) throw std::invalid_argument("bd_from_td: edge not covered by the tree decomposition");
    leaf[T + i] = e;
    adj[T + i].insert(home);
    adj[home].insert(T + i);
  }
  std::vector<char> alive(T + m, 1);
  // trim branches without leaves
  std::vector<int> stack;
  for (int t = 0; t < T; ++t)
    if (adj[t].size() <= 1) stack.push_back(t);
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (!alive[t] || adj[t].size() > 1) continue;
    alive[t] = 0;
    for (int s : adj[t]) {
      adj[s].erase(t);
      if (s < T && adj[s].size() <= 1) stack.push_back(s);
    }
    adj[t].clear();
  }
  // split high degrees
  for (int t = 0; t < T; ++t) {
    if (!alive[t]) continue;
    while (adj[t].size() > 3) {
      auto it = adj[t].begin();
      int a = *it++;
      int b = *it;
      int y = static_cast<int>(adj.size());
      adj.emplace_back();
      leaf.push_back(Edge{});
      alive.push_back(1);
      for (int s : {a, b}) {
        adj[t].erase(s);
        adj[s].erase(t);
        adj[s].insert(y);
        adj[y].insert(s);
      }
      adj[t].insert(y);
      adj[y].insert(t);
    }
  }
  // smooth degree 2
  for (int t = 0; t < static_cast<int>(adj.size()); ++t) {
    if (!alive[t] || leaf[t].u != 0 || adj[t].size() != 2) continue;
    int a = *adj[t].begin();
    int b = *std::next(adj[t].begin());
    adj[a].erase(t);
    adj[b].erase(t);
    adj[a].insert(b);
    adj[b].insert(a);
    adj[t].clear();
    alive[t] = 0;
  }
  std::vector<int> id(adj.size(), -1);
  int N = 0;
  for (size_t t = 0; t < adj.size(); ++t)
    if (alive[t]) id[t] = N++;
  bd.adj.assign(N, {});
  bd.leaf_edge.assign(N, Edge{});
  for (size_t t = 0; t < adj.size(); ++t) {
    if (!alive[t]) continue;
    bd.leaf_edge[id[t]] = leaf[t];
    for (int s : adj[t]) bd.adj[id[t]].push_back(id[s]);
  }
  bd.width = computed_width(g, bd);
  return bd;
}

TreeDecomposition td_from_bd(const PlaneGraph& g, const BranchDecomposition& bd) {
  TreeDecomposition td;
  int N = bd.num_nodes();
  int n = g.num_vertices();
  std::vector<char> used(n + 1, 0);
  if (N > 0) {
    auto rt = root_tree(bd.adj, 0);
    auto mid = middle_sets(g, bd, rt);
    td.bags.assign(N, {});
    td.parent = rt.parent;
    td.root = 0;
    for (int t = 0; t < N; ++t) {
      std::set<Vertex> bag;
      if (bd.is_leaf(t)) {
        bag = {bd.leaf_edge[t].u, bd.leaf_edge[t].v};
      } else {
        if (rt.parent[t] >= 0) bag.insert(mid[t].begin(), mid[t].end());
        for (int s : bd.adj[t])
          if (rt.parent[s] == t) bag.insert(mid[s].begin(), mid[s].end());
      }
      td.bags[t].assign(bag.begin(), bag.end());
      for (Vertex v : bag) used[v] = 1;
    }
  }
  for (Vertex v = 1; v <= n; ++v)
    if (!used[v]) {
      td.bags.push_back({v});
      td.parent.push_back(td.bags.size() == 1 ? -1 : 0);
    }
  if (td.bags.empty()) {
    td.bags.push_back({});
    td.parent.push_back(-1);
  }
  td.width = -1;
  for (auto& b : td.bags) td.width = std::max(td.width, static_cast<int>(b.size()) - 1);
  return td;
}

DecomposeResult branch_decompose(const PlaneGraph& g, int target, double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 1.0) throw std::invalid_argument("branch_decompose: epsilon must be in (0, 1]");
  DecomposeResult res;
  res.factor = 2.0 / epsilon + 3.0;
  auto heur = bd_from_td(g, min_fill_tree_decomposition(g));
  int wh = heur.width;
  auto ok_with = [&](BranchDecomposition bd, bool exact) {
    res.status = DecomposeStatus::Ok;
    res.exact = exact;
    res.within_factor = bd.width <= res.factor * std::max(target, 0);
    res.bd = std::move(bd);
    return res;
  };
  // small graphs: the optimum is cheap enough
  if (g.num_edges() <= 40 && g.num_vertices() <= 16) {
    if (auto ex = exact_branch_decomposition(g, wh, 20'000'000)) {
      if (ex->width <= target) return ok_with(*ex, true);
      if (ex->width <= res.factor * target) return ok_with(*ex, true);
    }
  }
  if (wh <= target) return ok_with(heur, false);
  // the side-2 grid is the 4-cycle; smaller sides prove nothing
  auto found = find_grid_minor(g, std::max(target + 1, 2));
  if (found.model) {
    res.status = DecomposeStatus::TooWide;
    res.witness = found.model;
    return res;
  }
  return ok_with(heur, false);
}

std::string write_decomposition(const TreeDecomposition& td) {
  std::ostringstream out;
  for (int t = 0; t < td.num_nodes(); ++t) {
    out << "node " << t << " bag";
    for (Vertex v : td.bags[t]) out << ' ' << v;
    out << '\n';
  }
  for (int t = 0; t < td.num_nodes(); ++t)
    if (td.parent[t] >= 0) out << "tree " << td.parent[t] << ' ' << t << '\n';
  return out.str();
}

std::string write_decomposition(const PlaneGraph& g, const BranchDecomposition& bd) {
  std::ostringstream out;
  int N = bd.num_nodes();
  std::vector<std::vector<Vertex>> mid(N);
  Rooted rt;
  if (N > 1) {
    rt = root_tree(bd.adj, 0);
    mid = middle_sets(g, bd, rt);
  }
  for (int t = 0; t < N; ++t) {
    if (bd.is_leaf(t)) {
      out << "leaf " << t << " edge " << bd.leaf_edge[t].u << ' ' << bd.leaf_edge[t].v << '\n';
    } else {
      // internal nodes carry the union of the middle sets around them
      std::set<Vertex> bag;
      if (rt.parent[t] >= 0) bag.insert(mid[t].begin(), mid[t].end());
      for (int s : bd.adj[t])
        if (rt.parent[s] == t) bag.insert(mid[s].begin(), mid[s].end());
      out << "node " << t << " bag";
      for (Vertex v : bag) out << ' ' << v;
      out << '\n';
    }
  }
  for (int t = 0; t < N; ++t)
    for (int s : bd.adj[t])
      if (t < s) out << "tree " << t << ' ' << s << '\n';
  return out.str();
}

}  // namespace pdpp
