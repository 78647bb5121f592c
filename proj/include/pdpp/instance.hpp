#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdpp/graph.hpp"

namespace pdpp {

using TerminalPair = std::pair<Vertex, Vertex>;

struct DppInstance {
  PlaneGraph graph;
  std::vector<TerminalPair> pairs;  // pair i+1 is pairs[i]
  int k() const { return static_cast<int>(pairs.size()); }
  std::vector<Vertex> terminals() const;
};

struct Solution {
  bool yes = false;
  std::vector<std::vector<Vertex>> paths;  // pair order
  bool operator==(const Solution&) const = default;
};

// Syntax and validation errors in instance/solution text. line and col are
// 1-based; col points at the offending token (0 when not tied to a token).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Throws ParseError. Non-planar input without rotation lines is reported as a
// ParseError as well (line 0).
DppInstance parse_instance(std::string_view text);
// Always writes rot lines and the outer dart so the embedding survives.
std::string write_instance(const DppInstance& inst);

Solution parse_solution(std::string_view text);
std::string write_solution(const Solution& s);

// Throws std::invalid_argument when the terminals are not 2k distinct
// vertices of g.
void check_terminals(const PlaneGraph& g, const std::vector<TerminalPair>& pairs);

// n x n grid, k pairs on distinct outer-cycle vertices. Throws
// std::invalid_argument when 2k exceeds the outer cycle.
DppInstance gen_grid_instance(int n, int k, std::uint64_t seed);
// Connected planar graph with n vertices and m edges: random stacked
// triangulation, relabelled, then random edge deletions that keep it
// connected. Throws std::invalid_argument on infeasible (n, m, k).
DppInstance gen_random_planar(int n, int m, int k, std::uint64_t seed);

// Seeded generator shared by the generators. mt19937_64 itself is fully
// specified; the standard distributions are not, so sampling is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pdpp
