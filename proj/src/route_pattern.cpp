#include <algorithm>
#include <functional>
#include <sstream>

#include "pdpp/instance.hpp"
#include "pdpp/reroute.hpp"

namespace pdpp {

namespace {

// position in the cyclic order up_1..up_k, down_k..down_1
int cyc(int k, BoundaryLabel x) { return x.rim == Rim::Up ? x.index - 1 : 2 * k - x.index; }

BoundaryLabel from_cyc(int k, int p) { return p < k ? BoundaryLabel{Rim::Up, p + 1} : BoundaryLabel{Rim::Down, 2 * k - p}; }

std::string label_str(BoundaryLabel x) {
  return std::string(x.rim == Rim::Up ? "up " : "down ") + std::to_string(x.index);
}

std::string edge_str(const std::pair<BoundaryLabel, BoundaryLabel>& e) {
  return label_str(e.first) + " - " + label_str(e.second);
}

PatternCheck bad(int e, std::string s) { return PatternCheck{false, e, std::move(s)}; }

PatternCheck check(const BoundaryPattern& h, bool perfect) {
  int k = h.k;
  if (k < 1) return bad(-1, "grid side must be positive");
  std::vector<int> used(2 * k, -1);
  for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
    for (auto x : {h.edges[e].first, h.edges[e].second}) {
      if (x.index < 1 || x.index > k) return bad(e, "label out of range in " + edge_str(h.edges[e]));
      int p = cyc(k, x);
      if (used[p] >= 0) return bad(e, label_str(x) + " is used twice");
      used[p] = e;
    }
  }
  if (perfect)
    for (int p = 0; p < 2 * k; ++p)
      if (used[p] < 0) return bad(-1, label_str(from_cyc(k, p)) + " is unmatched");
  for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
    auto [a, b] = h.edges[e];
    if (perfect && a.rim == b.rim && (a.index - b.index) % 2 == 0)
      return bad(e, "even gap under " + edge_str(h.edges[e]));
  }
  for (int e = 0; e < static_cast<int>(h.edges.size()); ++e)
    for (int f = e + 1; f < static_cast<int>(h.edges.size()); ++f) {
      int a = cyc(k, h.edges[e].first), b = cyc(k, h.edges[e].second);
      int c = cyc(k, h.edges[f].first), d = cyc(k, h.edges[f].second);
      if (a > b) std::swap(a, b);
      if (c > d) std::swap(c, d);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
        return bad(f, edge_str(h.edges[f]) + " crosses " + edge_str(h.edges[e]));
    }
  return {};
}

struct Counts {
  int up = 0, down = 0, cross = 0;
};

Counts count(const BoundaryPattern& h) {
  Counts c;
  for (auto [a, b] : h.edges) {
    if (a.rim != b.rim)
      ++c.cross;
    else if (a.rim == Rim::Up)
      ++c.up;
    else
      ++c.down;
  }
  return c;
}

RouteResult route(int k, const BoundaryPattern& h, bool perfect) {
  RouteResult res;
  if (k < 2) {
    res.failure = "grid side must be at least 2";
    return res;
  }
  if (h.k != k) {
    res.failure = "pattern side " + std::to_string(h.k) + " differs from grid side " + std::to_string(k);
    return res;
  }
  auto chk = check(h, perfect);
  if (!chk.ok) {
    res.failure = chk.violation;
    return res;
  }
  int need = required_side(h);
  if (need > k) {
    res.failure = "pattern needs side " + std::to_string(need);
    return res;
  }
  Counts cnt = count(h);
  int m = static_cast<int>(h.edges.size());
  // normalise: up end first for crossing edges, left end first otherwise
  std::vector<std::pair<BoundaryLabel, BoundaryLabel>> es = h.edges;
  for (auto& [a, b] : es) {
    if (a.rim == Rim::Down && b.rim == Rim::Up) std::swap(a, b);
    if (a.rim == b.rim && a.index > b.index) std::swap(a, b);
  }
  // depth of a same-side edge: same-side edges nested under it
  auto depth = [&](int e) {
    int d = 0;
    for (int f = 0; f < m; ++f)
      if (f != e && es[f].first.rim == es[e].first.rim && es[f].second.rim == es[e].first.rim &&
          es[f].first.index > es[e].first.index && es[f].second.index < es[e].second.index)
        ++d;
    return d;
  };
  auto rank = [&](int e) {
    int r = 0;
    for (int f = 0; f < m; ++f)
      if (es[f].first.rim != es[f].second.rim && es[f].first.index <= es[e].first.index) ++r;
    return r;
  };
  auto at = [&](int r, int c) { return grid_vertex(r, c, k); };
  // a path of straight runs through (row, col) corners
  auto polyline = [&](std::vector<std::pair<int, int>> corners) {
    std::vector<Vertex> p{at(corners[0].first, corners[0].second)};
    for (size_t s = 1; s < corners.size(); ++s) {
      auto [r, c] = corners[s - 1];
      auto [r2, c2] = corners[s];
      while (r != r2 || c != c2) {
        r += (r2 > r) - (r2 < r);
        c += (c2 > c) - (c2 < c);
        p.push_back(at(r, c));
      }
    }
    return p;
  };

  TopologicalMinorModel tm;
  // pattern ids: used labels, up labels first, by index
  std::vector<int> id(2 * k, -1);
  std::vector<BoundaryLabel> order;
  for (int i = 1; i <= k; ++i) order.push_back({Rim::Up, i});
  for (int i = 1; i <= k; ++i) order.push_back({Rim::Down, i});
  std::vector<char> used(2 * k, 0);
  for (auto [a, b] : es) used[cyc(k, a)] = used[cyc(k, b)] = 1;
  for (auto x : order)
    if (perfect || used[cyc(k, x)]) {
      id[cyc(k, x)] = tm.pattern_vertices++;
      tm.phi0.push_back(x.rim == Rim::Up ? at(0, x.index - 1) : at(k - 1, x.index - 1));
    }
  for (int e = 0; e < m; ++e) {
    auto [a, b] = es[e];
    int i = a.index - 1, j = b.index - 1;
    std::vector<Vertex> p;
    if (a.rim == Rim::Up && b.rim == Rim::Up) {
      int d = depth(e);
      p = polyline({{0, i}, {d, i}, {d, j}, {0, j}});
    } else if (a.rim == Rim::Down && b.rim == Rim::Down) {
      int d = depth(e);
      p = polyline({{k - 1, i}, {k - 1 - d, i}, {k - 1 - d, j}, {k - 1, j}});
    } else {
      int r = rank(e);
      int row = j >= i ? cnt.up + cnt.cross - r : cnt.up + r - 1;
      p = polyline({{0, i}, {row, i}, {row, j}, {k - 1, j}});
    }
    tm.pattern_edges.push_back({id[cyc(k, a)], id[cyc(k, b)]});
    tm.phi1.push_back(std::move(p));
  }
  auto ok = verify_topological_minor(make_grid(k, k), tm);
  if (!ok.ok) {
    res.failure = "routing failed verification: " + ok.violation;
    return res;
  }
  res.model = std::move(tm);
  return res;
}

}  // namespace

PatternCheck check_pattern(const BoundaryPattern& h) { return check(h, true); }
PatternCheck check_partial_pattern(const BoundaryPattern& h) { return check(h, false); }

int required_side(const BoundaryPattern& h) {
  Counts c = count(h);
  return std::max(c.up + c.down + c.cross, 1);
}

RouteResult route_pattern(int k, const BoundaryPattern& h) { return route(k, h, true); }
RouteResult route_partial(int k, const BoundaryPattern& h) { return route(k, h, false); }

BoundaryPattern parse_pattern(std::string_view text, int k) {
  BoundaryPattern h;
  int maxi = 0, line_no = 0;
  bool have_k = false;
  std::istringstream in{std::string(text)};
  std::string line;
  auto rim = [&](const std::string& w, int col) {
    if (w == "up") return Rim::Up;
    if (w == "down") return Rim::Down;
    throw ParseError(line_no, col, "expected up or down, got '" + w + "'");
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto c = line.find('#'); c != std::string::npos) line.resize(c);
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string t; ls >> t;) w.push_back(t);
    if (w.empty()) continue;
    auto num = [&](const std::string& s, int col) {
      try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size() || v < 1) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw ParseError(line_no, col, "expected a positive integer, got '" + s + "'");
      }
    };
    if (w[0] == "k") {
      if (w.size() != 2) throw ParseError(line_no, 1, "expected: k <side>");
      h.k = num(w[1], 2);
      have_k = true;
      continue;
    }
    if (w.size() != 4) throw ParseError(line_no, 1, "expected: up|down <i> up|down <j>");
    BoundaryLabel a{rim(w[0], 1), num(w[1], 2)}, b{rim(w[2], 3), num(w[3], 4)};
    maxi = std::max({maxi, a.index, b.index});
    h.edges.push_back({a, b});
  }
  if (k > 0)
    h.k = k;
  else if (!have_k)
    h.k = maxi;
  return h;
}

std::string write_pattern(const BoundaryPattern& h) {
  std::string s = "k " + std::to_string(h.k) + "\n";
  for (const auto& e : h.edges) s += label_str(e.first) + " " + label_str(e.second) + "\n";
  return s;
}

std::vector<BoundaryPattern> all_patterns(int k) {
  std::vector<BoundaryPattern> out;
  std::vector<std::pair<int, int>> cur;
  // non-crossing perfect matchings of positions [lo, hi)
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> open) {
    // open: list of unmatched intervals encoded as pairs lo, hi
    if (open.empty()) {
      BoundaryPattern h{k, {}};
      for (auto [a, b] : cur) h.edges.push_back({from_cyc(k, a), from_cyc(k, b)});
      out.push_back(h);
      return;
    }
    int lo = open[open.size() - 2], hi = open.back();
    open.resize(open.size() - 2);
    if (lo == hi) {
      rec(open);
      return;
    }
    for (int p = lo + 1; p < hi; p += 2) {
      cur.push_back({lo, p});
      auto next = open;
      next.insert(next.end(), {lo + 1, p, p + 1, hi});
      rec(next);
      cur.pop_back();
    }
  };
  rec({0, 2 * k});
  return out;
}

}  // namespace pdpp
