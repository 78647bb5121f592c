#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdpp/graph.hpp"
#include "pdpp/oracle.hpp"

namespace pdpp {

// C_0 innermost .. C_r outermost.
struct ConcentricCycles {
  std::vector<Cycle> cycles;
  int depth() const { return static_cast<int>(cycles.size()) - 1; }
};

// Closed interiors D_0..D_r. Regions point at g.
std::vector<DiskRegion> disc_sequence(const PlaneGraph& g, const ConcentricCycles& cc);
// Each C_i is a cycle of g lying in the open interior of D_{i+1}.
Verdict verify_concentric(const PlaneGraph& g, const ConcentricCycles& cc);

// 2(r+1) * ceil(sqrt(forbidden+1))
int concentric_side_bound(int r, int forbidden);

struct ConcentricResult {
  std::optional<ConcentricCycles> cycles;  // empty: INSUFFICIENT or no block worked
  int side_bound = 0;
  std::string failure;
};

// Rings of a 2(r+1)-block of the model whose outer disc avoids the forbidden
// vertices, tightened. The side bound is checked before anything else.
ConcentricResult concentric_from_grid(const PlaneGraph& g, const GridMinorModel& model,
                                      const std::vector<Vertex>& forbidden, int r);

struct TightCheck {
  bool tight = true;
  std::string violation;
};

// Exact: D_0 is minimal iff the subgraph inside D_0 has exactly one cycle;
// the annulus clause looks for a cycle winding around D_i inside
// D_{i+1} \ D_i other than C_{i+1}.
TightCheck verify_tight(const PlaneGraph& g, const ConcentricCycles& cc);
// Shrinks cycles until verify_tight holds. D'_i is inside D_i.
ConcentricCycles tighten(const PlaneGraph& g, ConcentricCycles cc);

struct CLConfiguration {
  ConcentricCycles cycles;
  Linkage linkage;
  int depth() const { return cycles.depth(); }
};

// Concentric cycles, a linkage, and no terminal inside D_r.
Verdict verify_configuration(const PlaneGraph& g, const CLConfiguration& q);

class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A linkage path is read as elements v0, v0v1, v1, ...; chords and
// semichords are maximal runs of elements.
struct Segment {
  int path = 0;                  // index into linkage.paths
  int first = 0, last = 0;       // vertex positions on that path
  std::vector<Vertex> vertices;  // path order
  int eccentricity = 0;
  bool extremal = false;
  std::vector<int> chords;                   // chords[i]: number of i-chords
  std::vector<std::vector<int>> semichords;  // semichords[i][c]: i-semichords of chord c
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

std::vector<Segment> segments(const PlaneGraph& g, const CLConfiguration& q);

struct ConvexityReport {
  bool convex = true;
  int segment = -1;
  int level = -1;
  std::string clause;  // "i", "ii.a", "ii.b", "ii.c", "iii"
};

ConvexityReport is_convex(const PlaneGraph& g, const CLConfiguration& q);

struct OutStructure {
  int out_segments = 0;
  int hairs = 0;
  int flying_hairs = 0;
  int caves = 0;
  std::vector<Vertex> flying;    // T0
  std::vector<Vertex> invading;  // T1
  std::vector<Vertex> bouncing;  // T2
};

OutStructure out_structure(const PlaneGraph& g, const CLConfiguration& q);
bool is_touch_free(const PlaneGraph& g, const CLConfiguration& q);
int count_extremal(const PlaneGraph& g, const CLConfiguration& q);

struct SegmentTree {
  std::vector<int> parent;  // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> segment;  // segment on the edge to the parent, -1 at the root
  int root = 0;
  int height = 0;
  int real_height = 1;
  int dilation = 0;

  int num_nodes() const { return static_cast<int>(parent.size()); }
  int degree(int t) const { return static_cast<int>(children[t].size()) + (parent[t] >= 0 ? 1 : 0); }
  int leaves() const;
};

// Throws ConfigurationError on non-convex input.
SegmentTree segment_tree(const PlaneGraph& g, const CLConfiguration& q);

struct SegmentTypes {
  std::vector<std::vector<int>> classes;  // segment ids, each class sorted
  bool transitive = true;
  std::string failure;
};

bool parallel(const PlaneGraph& g, const CLConfiguration& q, const std::vector<Segment>& segs, int a, int b);
// Throws ConfigurationError on non-convex input. When the relation is not
// transitive on the instance, classes is empty and failure names a triple.
SegmentTypes segment_types(const PlaneGraph& g, const CLConfiguration& q);

struct TiltedGrid {
  std::vector<std::vector<Vertex>> X;
  std::vector<std::vector<Vertex>> Z;
  int capacity() const { return static_cast<int>(X.size()); }
};

// Path families, intersections, orders, corners; contracting the
// intersections and the subpaths between them gives the square grid.
Verdict verify_tilted_grid(const PlaneGraph& g, const TiltedGrid& u);
// Closed interior of the perimeter meets the linkage exactly in the Z paths.
Verdict is_tidy(const PlaneGraph& g, const TiltedGrid& u, const Linkage& l);
// Perimeter X_1, Z_r, X_1 reversed... as a closed vertex sequence. Needs
// capacity >= 2.
Cycle tilted_grid_perimeter(const TiltedGrid& u);

struct TiltedGridResult {
  std::optional<TiltedGrid> grid;
  std::string failure;
};

TiltedGridResult extract_tilted_grid(const PlaneGraph& g, const CLConfiguration& q, const std::vector<int>& cls);

// Every two edges joined by a chain of edges consecutive around a common end.
bool cyclically_connected(const PlaneGraph& g, const std::vector<Edge>& edges);

struct ReducedPair {
  PlaneGraph graph;  // same ids; merged vertices become isolated
  CLConfiguration config;
  std::vector<Vertex> image;  // old vertex -> representative
  int kept = 0;               // L-edges on cycles left uncontracted
};

// Contracts every linkage edge that lies on some cycle, except where the
// result would need parallel edges or a cycle shorter than a triangle.
ReducedPair reduced_pair(const PlaneGraph& g, const CLConfiguration& q);

}  // namespace pdpp
