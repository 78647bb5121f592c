#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdpp/graph.hpp"

namespace pdpp {

// Unrooted tree whose leaves are the host edges. Internal nodes have degree 3
// (after construction; verify checks it).
struct BranchDecomposition {
  std::vector<std::vector<int>> adj;  // tree adjacency
  std::vector<Edge> leaf_edge;        // host edge of a leaf, {0,0} for internal nodes
  int width = 0;                      // declared width

  int num_nodes() const { return static_cast<int>(adj.size()); }
  bool is_leaf(int t) const { return leaf_edge[t].u != 0; }
};

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // sorted
  std::vector<int> parent;                // -1 at the root
  int root = 0;
  int width = -1;  // declared width: max bag size - 1

  int num_nodes() const { return static_cast<int>(bags.size()); }
};

struct DecompositionCheck {
  bool ok = true;
  std::string violation;
};

// Middle set sizes recomputed from scratch. Width of an empty or single-leaf
// decomposition is 0.
int computed_width(const PlaneGraph& g, const BranchDecomposition& bd);
DecompositionCheck verify_branch_decomposition(const PlaneGraph& g, const BranchDecomposition& bd);
DecompositionCheck verify_tree_decomposition(const PlaneGraph& g, const TreeDecomposition& td);

// Exact branchwidth by search over edge sets whose middle set is small.
// Needs m <= 64. Returns nullopt if max_width is exceeded or the work budget
// runs out.
std::optional<BranchDecomposition> exact_branch_decomposition(const PlaneGraph& g, int max_width,
                                                              long long budget = 50'000'000);
// Exact treewidth via the subset recurrence over elimination orders; n <= 24.
TreeDecomposition exact_tree_decomposition(const PlaneGraph& g);
// Bag of v: v and its later neighbours after filling.
TreeDecomposition td_from_elimination_order(const PlaneGraph& g, const std::vector<Vertex>& order);
// Greedy min-fill elimination.
TreeDecomposition min_fill_tree_decomposition(const PlaneGraph& g);

// Leaves hung off bags holding both endpoints, then the tree is trimmed and
// made cubic. Width <= width(td) + 1.
BranchDecomposition bd_from_td(const PlaneGraph& g, const TreeDecomposition& td);
// Bags are the unions of the middle sets around each node; width is at most
// ceil(1.5 * width(bd)) - 1. Isolated vertices get their own bags.
TreeDecomposition td_from_bd(const PlaneGraph& g, const BranchDecomposition& bd);

enum class DecomposeStatus { Ok, TooWide };

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::Ok;
  BranchDecomposition bd;                // when Ok
  std::optional<GridMinorModel> witness; // when TooWide: a (target+1)-grid minor
  double factor = 5.0;                   // 2/epsilon + 3
  bool exact = false;                    // bd has optimal width
  bool within_factor = true;             // width <= factor * target
};

// Either a decomposition of width <= factor * target, or a grid minor
// proving branchwidth > target. epsilon in (0, 1].
DecomposeResult branch_decompose(const PlaneGraph& g, int target, double epsilon = 1.0);

struct GridMinorOptions {
  std::vector<Vertex> forbidden;  // never used in branch sets
  long long budget = 2'000'000;   // per search method
  int exhaustive_limit = 20;      // run the exhaustive search only up to this many vertices
};

struct GridMinorSearch {
  std::optional<GridMinorModel> model;  // always verified
  std::string method;                   // which search produced it
  bool exhaustive = false;              // the exhaustive search ran to completion
};

GridMinorSearch find_grid_minor(const PlaneGraph& g, int q, const GridMinorOptions& opt = {});

// Text form: "node <id> bag <v...>", "leaf <id> edge <u> <v>", "tree <a> <b>".
std::string write_decomposition(const TreeDecomposition& td);
std::string write_decomposition(const PlaneGraph& g, const BranchDecomposition& bd);

}  // namespace pdpp
