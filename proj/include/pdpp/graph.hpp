#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdpp {

// Vertices are dense ids 1..n. Index 0 is never a vertex.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  bool valid() const { return from != 0 && to != 0; }
  bool operator==(const Dart&) const = default;
};

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Embedded simple graph given by a clockwise rotation system.
//
// Face tracing: the successor of dart u->v is v->w where w precedes u in the
// clockwise rotation of v. A dart's face lies to its right.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // rotation has n+1 entries, rotation[0] unused. Throws EmbeddingError when
  // the rotation is not a permutation of a simple neighbourhood or does not
  // describe a plane embedding.
  PlaneGraph(int n, std::vector<std::vector<Vertex>> rotation, Dart outer = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
  bool has_edge(Vertex u, Vertex v) const { return dart_id(u, v) >= 0; }
  // Sorted (u<v) edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_index(Vertex u, Vertex v) const;

  int num_darts() const { return 2 * m_; }
  int dart_id(Vertex from, Vertex to) const;
  Dart dart(int id) const { return {dart_from_[id], rot_[dart_from_[id]][id - offset_[dart_from_[id]]]}; }
  int twin(int id) const { return twin_[id]; }
  int next_in_face(int id) const { return next_[id]; }
  int face_of_dart(int id) const { return face_of_[id]; }
  int face_right(Vertex from, Vertex to) const { return face_of_[dart_id(from, to)]; }

  // Traced faces. Each non-trivial component contributes its own faces; the
  // component's outer face is reported by outer_face_of_component.
  int num_faces() const { return static_cast<int>(faces_.size()); }
  const std::vector<int>& face_darts(int f) const { return faces_[f]; }
  std::vector<Vertex> face_vertices(int f) const;
  Dart outer_dart() const { return outer_; }
  int outer_face() const { return outer_.valid() ? face_right(outer_.from, outer_.to) : -1; }

  int num_components() const { return num_components_; }
  int component_of(Vertex v) const { return comp_[v]; }
  // -1 for isolated vertices.
  int outer_face_of_component(int c) const { return comp_outer_face_[c]; }
  // Faces counted with all outer faces merged and one face for an empty
  // plane, so Euler reads n - m + f = 1 + c.
  int euler_face_count() const;

  // The graph with v isolated (all incident edges removed). Ids are kept.
  PlaneGraph without_vertex(Vertex v) const;
  PlaneGraph without_vertices(const std::vector<Vertex>& vs) const;
  PlaneGraph without_edges(const std::vector<Edge>& es) const;
  // Subgraph on the given edges, embedding inherited.
  PlaneGraph edge_subgraph(const std::vector<Edge>& es) const;

 private:
  void build();
  int pick_fallback_outer(int component) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> rot_;
  std::vector<Edge> edges_;
  std::vector<int> offset_;
  std::vector<Vertex> dart_from_;
  std::vector<int> twin_;
  std::vector<int> next_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> faces_;
  Dart outer_;
  int num_components_ = 0;
  std::vector<int> comp_;
  std::vector<int> comp_outer_face_;
};

// Planar embedding of an abstract simple graph. Throws EmbeddingError if the
// graph is not planar. The outer face is the longest face (ties: lowest dart).
PlaneGraph embed(int n, const std::vector<Edge>& edges);
// Same, keeping a prescribed outer dart when it is present.
PlaneGraph embed(int n, const std::vector<Edge>& edges, Dart outer);

// n - m + f == 1 + c using merged outer faces; also each component on its own.
bool satisfies_euler(const PlaneGraph& g);

struct Cycle {
  std::vector<Vertex> vertices;  // closed: last vertex is adjacent to first
  bool operator==(const Cycle&) const = default;
};

bool is_cycle_of(const PlaneGraph& g, const Cycle& c);
std::vector<Edge> cycle_edges(const Cycle& c);
// Rotate so that the smallest vertex comes first and the second vertex is the
// smaller of its two neighbours. Makes cycles comparable.
Cycle normalize(const Cycle& c);

enum class Side { Interior, Exterior };

// A side of a cycle, open or closed. Membership is decided by which faces can
// be reached from the outer face without crossing the cycle.
class DiskRegion {
 public:
  Cycle cycle;
  Side side = Side::Interior;
  bool closed = true;

  enum class Where : char { Outside, On, Inside };

  bool contains_vertex(Vertex v) const;
  bool contains_edge(Vertex u, Vertex v) const;
  bool contains_face(int f) const;
  // Position relative to the cycle ignoring side/closed.
  Where where_vertex(Vertex v) const { return static_cast<Where>(vstate_[v]); }
  Where where_edge(Vertex u, Vertex v) const;
  bool face_inside(int f) const { return face_in_[f] != 0; }
  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;
  int inside_face_count() const;
  const std::vector<char>& inside_faces() const { return face_in_; }
  DiskRegion with(Side s, bool is_closed) const;

 private:
  friend DiskRegion closed_interior(const PlaneGraph& g, const Cycle& c);
  const PlaneGraph* host_ = nullptr;
  std::vector<char> face_in_;
  std::vector<char> vstate_;
  std::vector<char> cycle_edge_;  // by edge index
};

// Throws std::invalid_argument if c is not a cycle of g. The returned region
// keeps a pointer to g; g must outlive it.
DiskRegion closed_interior(const PlaneGraph& g, const Cycle& c);

// Vertex/edge sets used for intersections of subgraphs.
struct Subgraph {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted
};
Subgraph subgraph_of_cycle(const Cycle& c);
Subgraph subgraph_of_path(const std::vector<Vertex>& path);
// Vertex sets and edge sets intersected separately.
Subgraph intersect(const Subgraph& a, const Subgraph& b);

// Grids.
PlaneGraph make_grid(int rows, int cols);
inline Vertex grid_vertex(int r, int c, int cols) { return r * cols + c + 1; }
// (rows, cols) when g is exactly make_grid(rows, cols) up to rotation order
// and outer face; nullopt otherwise.
std::optional<std::pair<int, int>> grid_shape(const PlaneGraph& g);
std::vector<Vertex> grid_corners(const PlaneGraph& g);
// Throws std::invalid_argument when g is not a grid with rows, cols >= 2.
std::vector<Vertex> centers(const PlaneGraph& g);
// Boundary cycle of a grid in clockwise order starting at the top-left corner.
Cycle grid_outer_cycle(int rows, int cols);
// Ring at distance d from the boundary of a rows x cols grid.
Cycle grid_ring(int rows, int cols, int d);

struct GridMinorModel {
  int rows = 0;
  int cols = 0;
  // phi[r * cols + c] is the branch set of grid vertex (r, c).
  std::vector<std::vector<Vertex>> phi;

  const std::vector<Vertex>& at(int r, int c) const { return phi[r * cols + c]; }
};

struct ModelCheck {
  bool ok = true;
  std::string violation;
};

ModelCheck verify_minor_model(const PlaneGraph& g, const GridMinorModel& m);
GridMinorModel identity_model(int rows, int cols);
// Restriction of a model to a sub-grid window.
GridMinorModel sub_model(const GridMinorModel& m, int top, int left, int rows, int cols);
// A cycle of g through the branch sets of the ring of window cells
// [top, top+size) x [left, left+size). size >= 2. nullopt if the model does
// not provide one.
std::optional<Cycle> model_ring_cycle(const PlaneGraph& g, const GridMinorModel& m, int top,
                                      int left, int size);

struct TopologicalMinorModel {
  int pattern_vertices = 0;
  std::vector<std::pair<int, int>> pattern_edges;  // 0-based pattern ids
  std::vector<Vertex> phi0;                        // pattern vertex -> host vertex
  std::vector<std::vector<Vertex>> phi1;           // pattern edge -> host path
};

ModelCheck verify_topological_minor(const PlaneGraph& g, const TopologicalMinorModel& m);

// Plain graph helpers.
std::vector<int> bfs_distances(const PlaneGraph& g, const std::vector<Vertex>& sources,
                               const std::vector<char>& blocked = {});
std::optional<std::vector<Vertex>> shortest_path(const PlaneGraph& g, Vertex s, Vertex t,
                                                 const std::vector<char>& blocked = {});
bool is_connected_set(const PlaneGraph& g, const std::vector<Vertex>& vs);

}  // namespace pdpp
