#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdpp/clconfig.hpp"
#include "pdpp/graph.hpp"
#include "pdpp/oracle.hpp"

namespace pdpp {

// Boundary labels of a k x k grid: x_i^up on the top row, x_i^down on the
// bottom row, i = 1..k from left to right.
enum class Rim { Up, Down };

struct BoundaryLabel {
  Rim rim = Rim::Up;
  int index = 1;
  bool operator==(const BoundaryLabel&) const = default;
};

struct BoundaryPattern {
  int k = 0;
  std::vector<std::pair<BoundaryLabel, BoundaryLabel>> edges;
};

struct PatternCheck {
  bool ok = true;
  int edge = -1;  // offending edge, -1 when not tied to one
  std::string violation;
};

// 1-regular on all 2k labels, no two edges cross in the cyclic order
// x_1^up..x_k^up, x_k^down..x_1^down, and same-side edges span an odd gap.
PatternCheck check_pattern(const BoundaryPattern& h);
// Same without the 1-regular requirement (labels used at most once).
PatternCheck check_partial_pattern(const BoundaryPattern& h);

// Rows the construction needs: upper edges + crossing edges + down edges.
int required_side(const BoundaryPattern& h);

struct RouteResult {
  std::optional<TopologicalMinorModel> model;  // host: make_grid(k, k)
  std::string failure;
};

// Pattern vertex ids: x_i^up -> i-1, x_i^down -> k+i-1. phi0 pins x_i^up to
// (row 0, column i-1) and x_i^down to (row k-1, column i-1).
RouteResult route_pattern(int k, const BoundaryPattern& h);
// Any non-crossing partial matching; needs required_side(h) <= k.
RouteResult route_partial(int k, const BoundaryPattern& h);

// "up 1 down 3" per line; '#' comments.
BoundaryPattern parse_pattern(std::string_view text, int k);
std::string write_pattern(const BoundaryPattern& h);
// Every valid perfect pattern on side k (non-crossing perfect matchings).
std::vector<BoundaryPattern> all_patterns(int k);

// Components of L inside a closed disc, as lines between two boundary
// vertices, ordered so that line i runs from up_i to down_i and the
// boundary reads up_1..up_r, down_r..down_1 (possibly reversed).
struct VerticalCrossing {
  bool ok = false;
  std::string failure;
  std::vector<std::vector<Vertex>> lines;
};

VerticalCrossing vertical_crossing(const PlaneGraph& g, const Linkage& l, const DiskRegion& disk);

struct Untangled {
  // N: boundary vertex pairs joined inside the disc, pairwise non-crossing
  std::vector<std::pair<Vertex, Vertex>> lines;
  // R: pieces of L outside the open disc kept in the new linkage
  std::vector<std::vector<Vertex>> outside;
  // for every path of L in order, its pieces and lines alternately
  std::vector<std::vector<int>> order;  // >= 0: outside piece, < 0: line ~x
};

struct UntangleResult {
  std::optional<Untangled> result;
  std::string failure;  // precondition or CANNOT
  long long nodes = 0;
};

// Fewest non-crossing lines that, with pieces of L outside the disc, give a
// linkage with L's pattern. Needs a vertical crossing with more than 2^k
// lines, k = number of paths of L. Fails with CANNOT if no such set has
// fewer lines than L.
UntangleResult untangle_disk(const PlaneGraph& g, const Linkage& l, const DiskRegion& disk, int k,
                             long long budget = 5'000'000);

struct ImproveResult {
  std::optional<Linkage> linkage;
  std::string failure;  // NO_IMPROVEMENT reason
  int z_edges_before = 0;
  int z_edges_after = 0;
};

// Linkage equivalent to l that agrees with l outside the grid's disc and
// uses strictly fewer Z edges. Needs u to be l-tidy with capacity > 2^k.
ImproveResult improve_over_tilted_grid(const PlaneGraph& g, const Linkage& l, const TiltedGrid& u);

}  // namespace pdpp
