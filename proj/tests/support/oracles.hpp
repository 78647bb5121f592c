#pragma once

// Naive reference implementations used only by tests. They share no code
// with the library beyond the graph type.

#include <utility>
#include <vector>

#include "pdpp/graph.hpp"
#include "pdpp/instance.hpp"

namespace pdpp::testing {

// Every simple s-t path avoiding the blocked vertices (s and t are never
// blocked). Plain recursion, no pruning.
std::vector<std::vector<Vertex>> all_simple_paths(const PlaneGraph& g, Vertex s, Vertex t,
                                                  const std::vector<char>& blocked);

// Tries every combination of simple paths. Only for tiny graphs.
bool naive_solvable(const DppInstance& inst);

// Minimum number of non-cycle edges over all linkages joining the given
// pairs; -1 when none exists.
int naive_min_cost(const PlaneGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                   const std::vector<Cycle>& cycles);

}  // namespace pdpp::testing

namespace pdpp::testing {

// Branchwidth from the recursive split definition, memoised over all edge
// subsets. m <= 14.
int naive_branchwidth(const PlaneGraph& g);

// Treewidth as the best over all elimination orders. n <= 9.
int naive_treewidth(const PlaneGraph& g);

// Whether some cycle has length at least 4 (equivalently a 2x2 grid minor).
bool has_long_cycle(const PlaneGraph& g);

}  // namespace pdpp::testing
