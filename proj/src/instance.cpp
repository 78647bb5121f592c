#include "pdpp/instance.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace pdpp {

std::vector<Vertex> DppInstance::terminals() const {
  std::vector<Vertex> out;
  for (auto [s, t] : pairs) {
    out.push_back(s);
    out.push_back(t);
  }
  return out;
}

ParseError::ParseError(int line, int col, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what
                                  : what),
      line_(line),
      col_(col) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  // rejection sampling keeps the result exactly uniform
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = eng_();
    if (x < limit) return x % bound;
  }
}

namespace {

struct Token {
  std::string_view text;
  int col;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

long long to_int(const Line& l, size_t idx) {
  if (idx >= l.tokens.size()) {
    int col = l.tokens.empty() ? 1 : l.tokens.back().col + static_cast<int>(l.tokens.back().text.size());
    throw ParseError(l.number, col, "missing field");
  }
  auto t = l.tokens[idx];
  long long v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    throw ParseError(l.number, t.col, "expected integer, got '" + std::string(t.text) + "'");
  return v;
}

void expect_arity(const Line& l, size_t n) {
  if (l.tokens.size() > n) throw ParseError(l.number, l.tokens[n].col, "unexpected trailing field");
  if (l.tokens.size() < n) to_int(l, l.tokens.size());  // throws missing field
}

Vertex to_vertex(const Line& l, size_t idx, long long n) {
  long long v = to_int(l, idx);
  if (v < 1 || v > n) throw ParseError(l.number, l.tokens[idx].col, "vertex " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

}  // namespace

void check_terminals(const PlaneGraph& g, const std::vector<TerminalPair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("need at least one terminal pair");
  std::set<Vertex> seen;
  for (auto [s, t] : pairs)
    for (Vertex v : {s, t}) {
      if (!g.has_vertex(v)) throw std::invalid_argument("terminal " + std::to_string(v) + " is not a vertex");
      if (!seen.insert(v).second)
        throw std::invalid_argument("terminals not distinct: vertex " + std::to_string(v) + " repeats");
    }
}

DppInstance parse_instance(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 0, "empty instance");
  const Line& head = lines.front();
  if (head.tokens[0].text != "p") throw ParseError(head.number, head.tokens[0].col, "expected 'p dpp <n> <m> <k>'");
  if (head.tokens.size() < 2 || head.tokens[1].text != "dpp")
    throw ParseError(head.number, head.tokens.size() < 2 ? 0 : head.tokens[1].col, "expected problem name 'dpp'");
  expect_arity(head, 5);
  long long n = to_int(head, 2), m = to_int(head, 3), k = to_int(head, 4);
  if (n < 1) throw ParseError(head.number, head.tokens[2].col, "n must be positive");
  if (n > 10'000'000) throw ParseError(head.number, head.tokens[2].col, "n too large");
  if (m < 0) throw ParseError(head.number, head.tokens[3].col, "m must be non-negative");
  if (k < 1) throw ParseError(head.number, head.tokens[4].col, "k must be at least 1");

  std::set<Edge> edges;
  std::vector<Edge> edge_list;
  std::vector<std::optional<std::vector<Vertex>>> rot(n + 1);
  bool any_rot = false;
  std::optional<Dart> outer;
  int outer_line = 0;
  std::vector<TerminalPair> pairs;
  std::set<Vertex> used;
  int last = head.number;

  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    last = l.number;
    auto kind = l.tokens[0].text;
    if (kind == "e") {
      expect_arity(l, 3);
      Vertex u = to_vertex(l, 1, n), v = to_vertex(l, 2, n);
      if (u == v) throw ParseError(l.number, l.tokens[2].col, "self loop");
      if (u > v) throw ParseError(l.number, l.tokens[1].col, "edge endpoints must satisfy u < v");
      if (!edges.insert({u, v}).second)
        throw ParseError(l.number, l.tokens[0].col, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      if (static_cast<long long>(edges.size()) > m) throw ParseError(l.number, l.tokens[0].col, "more than m edges");
      edge_list.push_back({u, v});
    } else if (kind == "rot") {
      Vertex v = to_vertex(l, 1, n);
      long long d = to_int(l, 2);
      if (d < 0 || d >= n) throw ParseError(l.number, l.tokens[2].col, "bad degree");
      expect_arity(l, 3 + d);
      if (rot[v]) throw ParseError(l.number, l.tokens[1].col, "second rotation for vertex " + std::to_string(v));
      std::vector<Vertex> nb;
      for (long long i = 0; i < d; ++i) nb.push_back(to_vertex(l, 3 + i, n));
      rot[v] = std::move(nb);
      any_rot = true;
    } else if (kind == "outer") {
      expect_arity(l, 3);
      if (outer) throw ParseError(l.number, l.tokens[0].col, "second outer record");
      outer = Dart{to_vertex(l, 1, n), to_vertex(l, 2, n)};
      outer_line = l.number;
    } else if (kind == "t") {
      expect_arity(l, 3);
      Vertex s = to_vertex(l, 1, n), t = to_vertex(l, 2, n);
      if (static_cast<long long>(pairs.size()) >= k) throw ParseError(l.number, l.tokens[0].col, "more than k pairs");
      if (!used.insert(s).second)
        throw ParseError(l.number, l.tokens[1].col, "terminals not distinct: vertex " + std::to_string(s) + " repeats");
      if (!used.insert(t).second)
        throw ParseError(l.number, l.tokens[2].col, "terminals not distinct: vertex " + std::to_string(t) + " repeats");
      pairs.push_back({s, t});
    } else if (kind == "p") {
      throw ParseError(l.number, l.tokens[0].col, "second problem line");
    } else {
      throw ParseError(l.number, l.tokens[0].col, "unknown record '" + std::string(kind) + "'");
    }
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(last, 0, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  if (static_cast<long long>(pairs.size()) != k)
    throw ParseError(last, 0, "expected " + std::to_string(k) + " pairs, found " + std::to_string(pairs.size()));

  DppInstance inst;
  if (outer && !edges.count(make_edge(outer->from, outer->to)))
    throw ParseError(outer_line, 0, "outer dart is not an edge");
  if (any_rot) {
    std::vector<std::vector<Vertex>> nbrs(n + 1);
    for (auto e : edge_list) {
      nbrs[e.u].push_back(e.v);
      nbrs[e.v].push_back(e.u);
    }
    std::vector<std::vector<Vertex>> rotation(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<Vertex> want = nbrs[v];
      std::vector<Vertex> got = rot[v].value_or(std::vector<Vertex>{});
      std::sort(want.begin(), want.end());
      std::vector<Vertex> sorted = got;
      std::sort(sorted.begin(), sorted.end());
      if (want != sorted)
        throw ParseError(0, 0, "rotation of vertex " + std::to_string(v) + " does not match its edges");
      rotation[v] = std::move(got);
    }
    try {
      inst.graph = PlaneGraph(static_cast<int>(n), std::move(rotation), outer.value_or(Dart{}));
    } catch (const EmbeddingError& e) {
      throw ParseError(0, 0, e.what());
    }
  } else {
    try {
      inst.graph = outer ? embed(static_cast<int>(n), edge_list, *outer) : embed(static_cast<int>(n), edge_list);
    } catch (const EmbeddingError& e) {
      throw ParseError(0, 0, e.what());
    }
  }
  inst.pairs = std::move(pairs);
  return inst;
}

std::string write_instance(const DppInstance& inst) {
  const auto& g = inst.graph;
  std::ostringstream out;
  out << "p dpp " << g.num_vertices() << ' ' << g.num_edges() << ' ' << inst.k() << '\n';
  for (auto e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    out << "rot " << v << ' ' << g.degree(v);
    for (Vertex w : g.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  if (g.outer_dart().valid()) out << "outer " << g.outer_dart().from << ' ' << g.outer_dart().to << '\n';
  for (auto [s, t] : inst.pairs) out << "t " << s << ' ' << t << '\n';
  return out.str();
}

Solution parse_solution(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 0, "empty solution");
  const Line& head = lines.front();
  if (head.tokens[0].text != "s" || head.tokens.size() < 2 || head.tokens[1].text != "dpp")
    throw ParseError(head.number, head.tokens[0].col, "expected 's dpp yes|no'");
  expect_arity(head, 3);
  Solution s;
  auto answer = head.tokens[2].text;
  if (answer == "yes")
    s.yes = true;
  else if (answer != "no")
    throw ParseError(head.number, head.tokens[2].col, "expected yes or no");
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (l.tokens[0].text != "path") throw ParseError(l.number, l.tokens[0].col, "expected 'path'");
    if (!s.yes) throw ParseError(l.number, l.tokens[0].col, "path line in a 'no' solution");
    long long idx = to_int(l, 1);
    if (idx != static_cast<long long>(s.paths.size()) + 1)
      throw ParseError(l.number, l.tokens[1].col, "expected path " + std::to_string(s.paths.size() + 1));
    if (l.tokens.size() < 3) to_int(l, 2);
    std::vector<Vertex> p;
    for (size_t i = 2; i < l.tokens.size(); ++i) {
      long long v = to_int(l, i);
      if (v < 1 || v > std::numeric_limits<Vertex>::max()) throw ParseError(l.number, l.tokens[i].col, "bad vertex");
      p.push_back(static_cast<Vertex>(v));
    }
    s.paths.push_back(std::move(p));
  }
  if (s.yes && s.paths.empty()) throw ParseError(head.number, 0, "'yes' solution without paths");
  return s;
}

std::string write_solution(const Solution& s) {
  std::ostringstream out;
  out << "s dpp " << (s.yes ? "yes" : "no") << '\n';
  if (s.yes)
    for (size_t i = 0; i < s.paths.size(); ++i) {
      out << "path " << i + 1;
      for (Vertex v : s.paths[i]) out << ' ' << v;
      out << '\n';
    }
  return out.str();
}

DppInstance gen_grid_instance(int n, int k, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_grid_instance: n must be at least 2");
  if (k < 1) throw std::invalid_argument("gen_grid_instance: k must be at least 1");
  auto ring = grid_outer_cycle(n, n).vertices;
  if (2 * k > static_cast<int>(ring.size()))
    throw std::invalid_argument("gen_grid_instance: 2k exceeds the " + std::to_string(ring.size()) +
                                " outer vertices");
  Rng rng(seed);
  rng.shuffle(ring);
  DppInstance inst{make_grid(n, n), {}};
  for (int i = 0; i < k; ++i) inst.pairs.push_back({ring[2 * i], ring[2 * i + 1]});
  return inst;
}

namespace {

bool connected_without(int n, const std::vector<Edge>& es, const std::vector<char>& dead) {
  std::vector<std::vector<int>> adj(n + 1);
  for (size_t i = 0; i < es.size(); ++i)
    if (!dead[i]) {
      adj[es[i].u].push_back(es[i].v);
      adj[es[i].v].push_back(es[i].u);
    }
  std::vector<char> seen(n + 1, 0);
  std::deque<int> q{1};
  seen[1] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push_back(w);
      }
  }
  return count == n;
}

}  // namespace

DppInstance gen_random_planar(int n, int m, int k, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_random_planar: n must be at least 2");
  if (k < 1 || 2 * k > n) throw std::invalid_argument("gen_random_planar: need 1 <= k <= n/2");
  long long max_m = n >= 3 ? 3LL * n - 6 : 1;
  if (m > max_m) throw std::invalid_argument("gen_random_planar: m > 3n-6");
  if (m < n - 1) throw std::invalid_argument("gen_random_planar: m < n-1 cannot be connected");

  Rng rng(seed);
  std::vector<Edge> es;
  if (n == 2) {
    es.push_back({1, 2});
  } else {
    // stacked triangulation on 0-based ids, both sides of the first triangle
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    es = {{0, 1}, {1, 2}, {0, 2}};
    for (int v = 3; v < n; ++v) {
      size_t f = rng.below(faces.size());
      auto [a, b, c] = faces[f];
      faces[f] = {a, b, v};
      faces.push_back({b, c, v});
      faces.push_back({c, a, v});
      es.push_back({a, v});
      es.push_back({b, v});
      es.push_back({c, v});
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    rng.shuffle(perm);
    for (auto& e : es) e = make_edge(perm[e.u], perm[e.v]);
  }
  std::sort(es.begin(), es.end());
  std::vector<size_t> order(es.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<char> dead(es.size(), 0);
  int have = static_cast<int>(es.size());
  for (size_t i : order) {
    if (have == m) break;
    dead[i] = 1;
    if (connected_without(n, es, dead))
      --have;
    else
      dead[i] = 0;
  }
  std::vector<Edge> kept;
  for (size_t i = 0; i < es.size(); ++i)
    if (!dead[i]) kept.push_back(es[i]);

  DppInstance inst{embed(n, kept), {}};
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i + 1;
  rng.shuffle(vs);
  for (int i = 0; i < k; ++i) inst.pairs.push_back({vs[2 * i], vs[2 * i + 1]});
  return inst;
}

}  // namespace pdpp
