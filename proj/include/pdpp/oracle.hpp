#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdpp/graph.hpp"
#include "pdpp/instance.hpp"

namespace pdpp {

// Vertex-disjoint paths of a host graph. Each path has at least two vertices.
struct Linkage {
  std::vector<std::vector<Vertex>> paths;

  // Unordered endpoint pairs (smaller id first), sorted.
  std::vector<std::pair<Vertex, Vertex>> pattern() const;
  // Sorted edge set.
  std::vector<Edge> edges() const;
  std::vector<Vertex> vertices() const;
  bool empty() const { return paths.empty(); }
};

bool equivalent(const Linkage& a, const Linkage& b);

struct Verdict {
  bool ok = true;
  std::string violation;
};

Verdict verify_linkage(const PlaneGraph& g, const Linkage& l);
// Checks a "yes" answer: path i runs from s_i to t_i along edges of the
// graph, is simple, and the paths are pairwise vertex-disjoint. A "no"
// answer carries nothing to check and is reported as not ok.
Verdict verify_solution(const DppInstance& inst, const Solution& s);

// Number of linkage edges that are not edges of any of the cycles.
int linkage_cost(const Linkage& l, const std::vector<Cycle>& cycles);

enum class OracleStatus { Yes, No, BudgetExceeded };
const char* to_string(OracleStatus s);

struct OracleResult {
  OracleStatus status = OracleStatus::BudgetExceeded;
  Solution solution;
  long long nodes = 0;
};

constexpr long long kDefaultOracleBudget = 10'000'000;

// Exhaustive search, pair by pair in input order. Failed search states
// (pair, head, occupied set) are memoized. BudgetExceeded means unknown.
OracleResult solve_bruteforce(const DppInstance& inst, long long budget = kDefaultOracleBudget);

struct CheapestResult {
  bool complete = false;  // false: budget ran out, linkage is the best seen
  Linkage linkage;
  int cost = 0;
  long long nodes = 0;
};

// Minimum-cost linkage with the same endpoint pairs as l0 (the path of each
// pair joins the same two vertices). Ties go to the lexicographically
// smallest sorted edge set. l0 must be a linkage of g.
CheapestResult cheapest_equivalent_linkage(const PlaneGraph& g, const Linkage& l0, const std::vector<Cycle>& cycles,
                                           long long budget = kDefaultOracleBudget);

}  // namespace pdpp
