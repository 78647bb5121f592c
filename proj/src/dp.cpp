#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pdpp/solver.hpp"

namespace pdpp {

const char* to_string(DpStatus s) {
  switch (s) {
    case DpStatus::Yes: return "yes";
    case DpStatus::No: return "no";
    case DpStatus::TooWide: return "too-wide";
  }
  return "?";
}

namespace {

// Per bag vertex: kFree (degree 0), kFull (degree 2), a partner vertex id
// (> 0), or a forgotten terminal of pair i, encoded label(i).
constexpr int kFree = -1;
constexpr int kFull = -2;
int label(int pair) { return -(10 + pair); }
bool is_label(int x) { return x <= -10; }
int pair_of_label(int x) { return -x - 10; }

using State = std::vector<int>;

enum class Kind { Leaf, IntroVertex, IntroEdge, Forget, Join };

struct NiceNode {
  Kind kind = Kind::Leaf;
  Vertex v = 0, w = 0;
  std::vector<Vertex> bag;  // sorted
  int a = -1, b = -1;       // children
};

struct NiceBuilder {
  const PlaneGraph& g;
  const TreeDecomposition& td;
  std::vector<NiceNode> nodes;
  std::vector<std::vector<int>> kids;
  std::set<Edge> introduced;

  NiceBuilder(const PlaneGraph& g_, const TreeDecomposition& td_) : g(g_), td(td_), kids(td_.num_nodes()) {
    for (int t = 0; t < td.num_nodes(); ++t)
      if (td.parent[t] >= 0) kids[td.parent[t]].push_back(t);
  }

  int add(NiceNode n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  int forget(int id, Vertex x) {
    // edges to vertices still in the bag are introduced right before x goes
    for (Vertex w : g.rotation(x)) {
      const auto& bag = nodes[id].bag;
      if (!std::binary_search(bag.begin(), bag.end(), w)) continue;
      if (!introduced.insert(make_edge(x, w)).second) continue;
      NiceNode e{Kind::IntroEdge, x, w, bag, id, -1};
      id = add(std::move(e));
    }
    NiceNode f{Kind::Forget, x, 0, nodes[id].bag, id, -1};
    std::erase(f.bag, x);
    return add(std::move(f));
  }

  int morph(int id, const std::vector<Vertex>& to) {
    std::vector<Vertex> from = nodes[id].bag;
    for (Vertex x : from)
      if (!std::binary_search(to.begin(), to.end(), x)) id = forget(id, x);
    for (Vertex x : to)
      if (!std::binary_search(nodes[id].bag.begin(), nodes[id].bag.end(), x)) {
        NiceNode n{Kind::IntroVertex, x, 0, nodes[id].bag, id, -1};
        n.bag.insert(std::lower_bound(n.bag.begin(), n.bag.end(), x), x);
        id = add(std::move(n));
      }
    return id;
  }

  int build(int t) {
    int cur = -1;
    for (int c : kids[t]) {
      int id = morph(build(c), td.bags[t]);
      cur = cur < 0 ? id : add(NiceNode{Kind::Join, 0, 0, td.bags[t], cur, id});
    }
    if (cur < 0) cur = morph(add(NiceNode{}), td.bags[t]);
    return cur;
  }

  int build_root() {
    int id = build(td.root);
    return morph(id, {});
  }
};

struct Entry {
  State s;
  int a = -1, b = -1;  // entries of the children
  bool used = false;   // IntroEdge: the edge is taken
};

struct Table {
  std::map<State, int> index;
  std::vector<Entry> entries;
  void put(State s, int a, int b, bool used) {
    if (index.count(s)) return;
    index.emplace(s, static_cast<int>(entries.size()));
    entries.push_back({std::move(s), a, b, used});
  }
};

struct Dp {
  const DppInstance& inst;
  std::vector<int> term;  // pair index of a terminal, -1 otherwise

  explicit Dp(const DppInstance& in) : inst(in), term(in.graph.num_vertices() + 1, -1) {
    for (int i = 0; i < in.k(); ++i) term[in.pairs[i].first] = term[in.pairs[i].second] = i;
  }

  int cap(Vertex x) const { return term[x] >= 0 ? 1 : 2; }
  static int deg(int val) { return val == kFree ? 0 : val == kFull ? 2 : 1; }
  // pair an end belongs to, -1 for an open non-terminal end
  int pair_of_end(int e) const { return is_label(e) ? pair_of_label(e) : term[e]; }
  bool conflict(int e1, int e2) const {
    int p = pair_of_end(e1), q = pair_of_end(e2);
    return p >= 0 && q >= 0 && p != q;
  }

  static int pos(const std::vector<Vertex>& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  }

  std::optional<State> add_edge(const std::vector<Vertex>& bag, State s, Vertex u, Vertex v) const {
    int pu = pos(bag, u), pv = pos(bag, v);
    int du = deg(s[pu]), dv = deg(s[pv]);
    if (du >= cap(u) || dv >= cap(v)) return std::nullopt;
    if (du == 1 && s[pu] == static_cast<int>(v)) return std::nullopt;  // closes a cycle
    int fu = du == 0 ? static_cast<int>(u) : s[pu];
    int fv = dv == 0 ? static_cast<int>(v) : s[pv];
    if (conflict(fu, fv)) return std::nullopt;
    if (du == 1) s[pu] = kFull;
    if (dv == 1) s[pv] = kFull;
    if (is_label(fu) && is_label(fv)) return s;  // pair completed
    if (!is_label(fu)) s[pos(bag, fu)] = fv;
    if (!is_label(fv)) s[pos(bag, fv)] = fu;
    return s;
  }

  std::optional<State> forget(const std::vector<Vertex>& bag, State s, Vertex x) const {
    int px = pos(bag, x);
    int val = s[px];
    if (term[x] >= 0) {
      if (deg(val) != 1) return std::nullopt;
      if (!is_label(val)) s[pos(bag, val)] = label(term[x]);
    } else if (deg(val) == 1) {
      return std::nullopt;
    }
    s.erase(s.begin() + px);
    return s;
  }

  std::optional<State> join(const std::vector<Vertex>& bag, const State& l, const State& r) const {
    int n = static_cast<int>(bag.size());
    State out(n, kFree);
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = deg(l[i]) + deg(r[i]);
      if (d[i] > cap(bag[i])) return std::nullopt;
      if (d[i] == 2) out[i] = kFull;
    }
    // fragments of the two sides glued at shared vertices form paths
    std::vector<char> seen(n, 0);
    const State* side[2] = {&l, &r};
    auto link = [&](int i, int sd) { return deg((*side[sd])[i]) == 1 ? (*side[sd])[i] : kFree; };
    // walk from vertex i having arrived over side `from` (-1: start)
    auto walk = [&](int i, int from) -> int {
      while (true) {
        seen[i] = 1;
        int sd = -1;
        for (int t = 0; t < 2; ++t)
          if (t != from && link(i, t) != kFree) sd = t;
        if (sd < 0) return static_cast<int>(bag[i]);
        int nx = link(i, sd);
        if (is_label(nx)) return nx;
        i = pos(bag, nx);
        from = sd;
      }
    };
    for (int i = 0; i < n; ++i) {
      if (d[i] != 1 && !(d[i] == 2 && deg(l[i]) == 1 && deg(r[i]) == 1)) continue;
      for (int t = 0; t < 2; ++t) {
        // starts: an end vertex, or a label hanging off vertex i on side t
        int start_end;
        int other;
        if (d[i] == 1) {
          if (t == 1 || seen[i]) continue;
          start_end = static_cast<int>(bag[i]);
          other = walk(i, -1);
        } else {
          if (!is_label(link(i, t)) || seen[i]) continue;
          start_end = link(i, t);
          other = walk(i, t);
        }
        if (conflict(start_end, other)) return std::nullopt;
        if (is_label(start_end) && is_label(other)) continue;
        if (!is_label(start_end)) out[pos(bag, start_end)] = other;
        if (!is_label(other)) out[pos(bag, other)] = start_end;
      }
    }
    for (int i = 0; i < n; ++i)
      if (d[i] == 2 && deg(l[i]) == 1 && deg(r[i]) == 1 && !seen[i]) return std::nullopt;  // a cycle
    // ends met from both sides were written twice with the same values;
    // a d=1 vertex reached only as the far end of a walk keeps its partner
    return out;
  }
};

}  // namespace

DpResult dp_solve(const DppInstance& inst, const TreeDecomposition& td, long long state_budget) {
  const PlaneGraph& g = inst.graph;
  if (auto c = verify_tree_decomposition(g, td); !c.ok)
    throw std::invalid_argument("dp_solve: not a tree decomposition: " + c.violation);
  check_terminals(g, inst.pairs);
  DpResult res;
  res.width = td.width;
  if (inst.k() == 0) {
    res.status = DpStatus::Yes;
    res.solution.yes = true;
    return res;
  }

  NiceBuilder nb(g, td);
  int root = nb.build_root();
  const auto& nodes = nb.nodes;
  Dp dp(inst);
  std::vector<Table> tab(nodes.size());
  for (int id = 0; id <= root; ++id) {
    const NiceNode& nd = nodes[id];
    Table& T = tab[id];
    switch (nd.kind) {
      case Kind::Leaf:
        T.put({}, -1, -1, false);
        break;
      case Kind::IntroVertex: {
        int p = Dp::pos(nd.bag, nd.v);
        const Table& C = tab[nd.a];
        for (int e = 0; e < static_cast<int>(C.entries.size()); ++e) {
          State s = C.entries[e].s;
          s.insert(s.begin() + p, kFree);
          T.put(std::move(s), e, -1, false);
        }
        break;
      }
      case Kind::IntroEdge: {
        const Table& C = tab[nd.a];
        for (int e = 0; e < static_cast<int>(C.entries.size()); ++e) {
          T.put(C.entries[e].s, e, -1, false);
          if (auto s = dp.add_edge(nd.bag, C.entries[e].s, nd.v, nd.w)) T.put(std::move(*s), e, -1, true);
        }
        break;
      }
      case Kind::Forget: {
        const Table& C = tab[nd.a];
        const auto& cbag = nodes[nd.a].bag;
        for (int e = 0; e < static_cast<int>(C.entries.size()); ++e)
          if (auto s = dp.forget(cbag, C.entries[e].s, nd.v)) T.put(std::move(*s), e, -1, false);
        break;
      }
      case Kind::Join: {
        const Table& L = tab[nd.a];
        const Table& R = tab[nd.b];
        for (int x = 0; x < static_cast<int>(L.entries.size()); ++x)
          for (int y = 0; y < static_cast<int>(R.entries.size()); ++y) {
            if (auto s = dp.join(nd.bag, L.entries[x].s, R.entries[y].s)) T.put(std::move(*s), x, y, false);
            if (res.states + static_cast<long long>(T.entries.size()) > state_budget) break;
          }
        break;
      }
    }
    res.states += static_cast<long long>(T.entries.size());
    if (res.states > state_budget) {
      res.status = DpStatus::TooWide;
      return res;
    }
  }

  const Table& top = tab[root];
  if (top.entries.empty()) {
    res.status = DpStatus::No;
    return res;
  }
  // walk the back pointers and collect the taken edges
  std::vector<std::vector<Vertex>> adj(g.num_vertices() + 1);
  std::vector<std::pair<int, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto [id, e] = stack.back();
    stack.pop_back();
    const NiceNode& nd = nodes[id];
    const Entry& en = tab[id].entries[e];
    if (nd.kind == Kind::IntroEdge && en.used) {
      adj[nd.v].push_back(nd.w);
      adj[nd.w].push_back(nd.v);
    }
    if (nd.a >= 0) stack.push_back({nd.a, en.a});
    if (nd.b >= 0) stack.push_back({nd.b, en.b});
  }
  res.status = DpStatus::Yes;
  res.solution.yes = true;
  for (auto [s, t] : inst.pairs) {
    std::vector<Vertex> p{s};
    Vertex prev = 0, cur = s;
    while (cur != t) {
      Vertex nx = 0;
      for (Vertex w : adj[cur])
        if (w != prev) nx = w;
      if (nx == 0) throw std::logic_error("dp_solve: reconstruction broke off");
      prev = cur;
      cur = nx;
      p.push_back(cur);
    }
    res.solution.paths.push_back(std::move(p));
  }
  return res;
}

}  // namespace pdpp
