#include "pdpp/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

namespace pdpp {

std::vector<std::pair<Vertex, Vertex>> Linkage::pattern() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto& p : paths) out.push_back(std::minmax(p.front(), p.back()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Linkage::edges() const {
  std::vector<Edge> out;
  for (auto& p : paths)
    for (size_t i = 0; i + 1 < p.size(); ++i) out.push_back(make_edge(p[i], p[i + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> Linkage::vertices() const {
  std::vector<Vertex> out;
  for (auto& p : paths) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool equivalent(const Linkage& a, const Linkage& b) { return a.pattern() == b.pattern(); }

const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Yes: return "yes";
    case OracleStatus::No: return "no";
    case OracleStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

Verdict fail(std::string msg) { return {false, std::move(msg)}; }

// Shared path checks: edges exist, vertices inside the graph, disjointness.
Verdict check_paths(const PlaneGraph& g, const std::vector<std::vector<Vertex>>& paths) {
  std::vector<int> owner(g.num_vertices() + 1, -1);
  for (size_t i = 0; i < paths.size(); ++i) {
    auto& p = paths[i];
    if (p.empty()) return fail("path " + std::to_string(i + 1) + " is empty");
    for (size_t j = 0; j < p.size(); ++j) {
      Vertex v = p[j];
      if (!g.has_vertex(v)) return fail("path " + std::to_string(i + 1) + " uses unknown vertex " + std::to_string(v));
      if (owner[v] == static_cast<int>(i))
        return fail("path " + std::to_string(i + 1) + " repeats vertex " + std::to_string(v));
      if (owner[v] >= 0)
        return fail("paths " + std::to_string(owner[v] + 1) + " and " + std::to_string(i + 1) + " share vertex " +
                    std::to_string(v));
      owner[v] = static_cast<int>(i);
      if (j > 0 && !g.has_edge(p[j - 1], v))
        return fail("path " + std::to_string(i + 1) + " step " + std::to_string(p[j - 1]) + "-" + std::to_string(v) +
                    " is not an edge");
    }
  }
  return {};
}

}  // namespace

Verdict verify_linkage(const PlaneGraph& g, const Linkage& l) {
  for (size_t i = 0; i < l.paths.size(); ++i)
    if (l.paths[i].size() < 2) return fail("linkage path " + std::to_string(i + 1) + " has fewer than two vertices");
  return check_paths(g, l.paths);
}

Verdict verify_solution(const DppInstance& inst, const Solution& s) {
  if (!s.yes) return fail("a 'no' answer has no paths to check");
  if (static_cast<int>(s.paths.size()) != inst.k())
    return fail("expected " + std::to_string(inst.k()) + " paths, got " + std::to_string(s.paths.size()));
  for (int i = 0; i < inst.k(); ++i) {
    auto& p = s.paths[i];
    if (p.empty()) return fail("path " + std::to_string(i + 1) + " is empty");
    if (p.front() != inst.pairs[i].first || p.back() != inst.pairs[i].second)
      return fail("path " + std::to_string(i + 1) + " does not run from " + std::to_string(inst.pairs[i].first) +
                  " to " + std::to_string(inst.pairs[i].second));
  }
  return check_paths(inst.graph, s.paths);
}

int linkage_cost(const Linkage& l, const std::vector<Cycle>& cycles) {
  std::set<Edge> on_cycles;
  for (auto& c : cycles)
    for (auto e : cycle_edges(c)) on_cycles.insert(e);
  int cost = 0;
  for (auto e : l.edges()) cost += !on_cycles.count(e);
  return cost;
}

namespace {

struct BudgetOut {};

// Search state shared by the exhaustive engines: sorted adjacency, terminal
// reservations, occupancy and the current path stack.
struct PathSpace {
  const PlaneGraph& g;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::vector<Vertex>> adj;
  std::vector<int> terminal_of;  // pair index or -1
  std::vector<char> used;
  std::vector<std::vector<Vertex>> paths;
  long long budget;
  long long nodes = 0;

  PathSpace(const PlaneGraph& graph, std::vector<std::pair<Vertex, Vertex>> ps, long long b)
      : g(graph), pairs(std::move(ps)), budget(b) {
    int n = g.num_vertices();
    adj.resize(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
      adj[v] = g.rotation(v);
      std::sort(adj[v].begin(), adj[v].end());
    }
    terminal_of.assign(n + 1, -1);
    for (size_t i = 0; i < pairs.size(); ++i) {
      terminal_of[pairs[i].first] = static_cast<int>(i);
      terminal_of[pairs[i].second] = static_cast<int>(i);
    }
    used.assign(n + 1, 0);
    paths.resize(pairs.size());
  }

  void tick() {
    if (++nodes > budget) throw BudgetOut{};
  }

  // May pair i's path step onto w?
  bool enterable(int i, Vertex w) const {
    if (used[w]) return false;
    return terminal_of[w] < 0 || (terminal_of[w] == i && w == pairs[i].second);
  }

  // Is dst reachable from src for pair i through free vertices?
  bool reachable(int i, Vertex src, Vertex dst, std::vector<int>& mark, int stamp) const {
    std::vector<Vertex> stack{src};
    mark[src] = stamp;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v]) {
        if (w == dst) return true;
        if (mark[w] == stamp || !enterable(i, w)) continue;
        mark[w] = stamp;
        stack.push_back(w);
      }
    }
    return false;
  }
};

class BruteForce {
 public:
  BruteForce(const DppInstance& inst, long long budget)
      : space_(inst.graph, inst.pairs, budget), mark_(inst.graph.num_vertices() + 1, 0) {
    words_ = (inst.graph.num_vertices() + 64) / 64;
  }

  OracleResult run() {
    OracleResult r;
    try {
      bool found = start(0);
      r.status = found ? OracleStatus::Yes : OracleStatus::No;
      if (found) r.solution = Solution{true, space_.paths};
    } catch (const BudgetOut&) {
      r.status = OracleStatus::BudgetExceeded;
    }
    r.nodes = space_.nodes;
    return r;
  }

 private:
  bool start(int i) {
    if (i == static_cast<int>(space_.pairs.size())) return true;
    Vertex s = space_.pairs[i].first;
    space_.used[s] = 1;
    space_.paths[i] = {s};
    bool ok = extend(i, s);
    if (!ok) {
      space_.used[s] = 0;
      space_.paths[i].clear();
    }
    return ok;
  }

  // later pairs must still be connectable, and t_i reachable from cur
  bool feasible(int i, Vertex cur) {
    if (!space_.reachable(i, cur, space_.pairs[i].second, mark_, ++stamp_)) return false;
    for (size_t j = i + 1; j < space_.pairs.size(); ++j) {
      auto [s, t] = space_.pairs[j];
      if (!space_.reachable(static_cast<int>(j), s, t, mark_, ++stamp_)) return false;
    }
    return true;
  }

  std::string key(int i, Vertex cur) const {
    std::string k(sizeof(int) * 2 + words_ * sizeof(std::uint64_t), '\0');
    std::vector<std::uint64_t> bits(words_, 0);
    for (size_t v = 1; v < space_.used.size(); ++v)
      if (space_.used[v]) bits[v / 64] |= std::uint64_t{1} << (v % 64);
    std::memcpy(k.data(), &i, sizeof(int));
    std::memcpy(k.data() + sizeof(int), &cur, sizeof(int));
    std::memcpy(k.data() + 2 * sizeof(int), bits.data(), words_ * sizeof(std::uint64_t));
    return k;
  }

  bool extend(int i, Vertex cur) {
    space_.tick();
    std::string k = key(i, cur);
    if (failed_.count(k)) return false;
    if (feasible(i, cur)) {
      Vertex t = space_.pairs[i].second;
      for (Vertex w : space_.adj[cur]) {
        if (!space_.enterable(i, w)) continue;
        space_.used[w] = 1;
        space_.paths[i].push_back(w);
        bool ok = w == t ? start(i + 1) : extend(i, w);
        if (ok) return true;
        space_.paths[i].pop_back();
        space_.used[w] = 0;
      }
    }
    if (failed_.size() < kMemoCap) failed_.insert(std::move(k));
    return false;
  }

  static constexpr size_t kMemoCap = 4'000'000;
  PathSpace space_;
  std::vector<int> mark_;
  int stamp_ = 0;
  int words_ = 1;
  std::unordered_set<std::string> failed_;
};

}  // namespace

OracleResult solve_bruteforce(const DppInstance& inst, long long budget) {
  check_terminals(inst.graph, inst.pairs);
  return BruteForce(inst, budget).run();
}

namespace {

class Cheapest {
 public:
  Cheapest(const PlaneGraph& g, const Linkage& l0, const std::vector<Cycle>& cycles, long long budget)
      : space_(g, endpoints(l0), budget), dist_(g.num_vertices() + 1) {
    for (auto& c : cycles)
      for (auto e : cycle_edges(c)) free_edges_.insert(e);
    best_ = l0;
    best_cost_ = linkage_cost(l0, cycles);
    best_edges_ = l0.edges();
  }

  CheapestResult run() {
    CheapestResult r;
    try {
      start(0, 0);
      r.complete = true;
    } catch (const BudgetOut&) {
      r.complete = false;
    }
    r.linkage = best_;
    r.cost = best_cost_;
    r.nodes = space_.nodes;
    return r;
  }

 private:
  static std::vector<std::pair<Vertex, Vertex>> endpoints(const Linkage& l) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto& p : l.paths) out.push_back({p.front(), p.back()});
    return out;
  }

  int weight(Vertex u, Vertex v) const { return free_edges_.count(make_edge(u, v)) ? 0 : 1; }

  // 0-1 BFS distance from src to dst for pair i through free vertices.
  int distance(int i, Vertex src, Vertex dst) {
    constexpr int inf = std::numeric_limits<int>::max();
    std::fill(dist_.begin(), dist_.end(), inf);
    std::deque<Vertex> q{src};
    dist_[src] = 0;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      if (v == dst) return dist_[v];
      for (Vertex w : space_.adj[v]) {
        if (w != dst && !space_.enterable(i, w)) continue;
        int d = dist_[v] + weight(v, w);
        if (d >= dist_[w]) continue;
        dist_[w] = d;
        if (weight(v, w) == 0)
          q.push_front(w);
        else
          q.push_back(w);
      }
    }
    return inf;
  }

  // lower bound on the remaining cost, or -1 when some pair is cut off
  int lower_bound(int i, Vertex cur) {
    long long total = 0;
    int d = distance(i, cur, space_.pairs[i].second);
    if (d == std::numeric_limits<int>::max()) return -1;
    total += d;
    for (size_t j = i + 1; j < space_.pairs.size(); ++j) {
      auto [s, t] = space_.pairs[j];
      int dj = distance(static_cast<int>(j), s, t);
      if (dj == std::numeric_limits<int>::max()) return -1;
      total += dj;
    }
    return static_cast<int>(std::min<long long>(total, std::numeric_limits<int>::max() / 2));
  }

  void start(int i, int cost) {
    if (i == static_cast<int>(space_.pairs.size())) {
      record(cost);
      return;
    }
    Vertex s = space_.pairs[i].first;
    space_.used[s] = 1;
    space_.paths[i] = {s};
    extend(i, s, cost);
    space_.used[s] = 0;
    space_.paths[i].clear();
  }

  void extend(int i, Vertex cur, int cost) {
    space_.tick();
    int lb = lower_bound(i, cur);
    if (lb < 0 || cost + lb > best_cost_) return;
    Vertex t = space_.pairs[i].second;
    for (Vertex w : space_.adj[cur]) {
      if (!space_.enterable(i, w)) continue;
      int c = cost + weight(cur, w);
      if (c > best_cost_) continue;
      space_.used[w] = 1;
      space_.paths[i].push_back(w);
      if (w == t)
        start(i + 1, c);
      else
        extend(i, w, c);
      space_.paths[i].pop_back();
      space_.used[w] = 0;
    }
  }

  void record(int cost) {
    Linkage l{space_.paths};
    auto edges = l.edges();
    if (cost < best_cost_ || (cost == best_cost_ && edges < best_edges_)) {
      best_cost_ = cost;
      best_edges_ = std::move(edges);
      best_ = std::move(l);
    }
  }

  PathSpace space_;
  std::set<Edge> free_edges_;
  std::vector<int> dist_;
  Linkage best_;
  int best_cost_ = 0;
  std::vector<Edge> best_edges_;
};

}  // namespace

CheapestResult cheapest_equivalent_linkage(const PlaneGraph& g, const Linkage& l0, const std::vector<Cycle>& cycles,
                                           long long budget) {
  auto v = verify_linkage(g, l0);
  if (!v.ok) throw std::invalid_argument("cheapest_equivalent_linkage: " + v.violation);
  if (l0.empty()) return {true, l0, 0, 0};
  return Cheapest(g, l0, cycles, budget).run();
}

}  // namespace pdpp
