#pragma once

// Hand-built hosts and configurations shared by the tests.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pdpp/clconfig.hpp"
#include "pdpp/graph.hpp"
#include "pdpp/instance.hpp"

namespace pdpp::testing {

// Straight-line drawing to rotation system (clockwise by angle).
PlaneGraph from_drawing(const std::vector<std::pair<double, double>>& xy, const std::vector<Edge>& edges);

// Rings 0..rings-1 of `angles` vertices each, ring j at radius j+1, with
// radial edges between consecutive rings. Vertex (j, a) is j*angles+a+1.
// Extra vertices (pendants) get the following ids.
class PolarBuilder {
 public:
  PolarBuilder(int rings, int angles);
  Vertex at(int ring, int angle) const { return ring * angles_ + angle + 1; }
  int angles() const { return angles_; }
  int rings() const { return rings_; }
  // New vertex outside the last ring at the given angle, joined to (rings-1, angle).
  Vertex pendant(int angle);
  // Diagonal (j, a) - (j+1, a+1) inside one quadrilateral face.
  void diagonal(int ring, int angle);
  void add_edge(Vertex u, Vertex v);
  PlaneGraph build() const;
  Cycle ring(int j) const;

 private:
  int rings_, angles_;
  std::vector<std::pair<double, double>> xy_;
  std::vector<Edge> edges_;
};

// Segment of eccentricity ecc on an r-ring layout: down at angle a, along
// ring ecc to angle b, up at b; pendants at both ends. ecc == r gives a
// path along C_r.
std::vector<Vertex> polar_segment_path(PolarBuilder& pb, int r, int ecc, int a, int b);

struct Fixture {
  PlaneGraph g;
  CLConfiguration q;
};

// Convex configuration of depth 7 whose segment tree has 11 leaves, height
// 8, dilation 4, real height 4 and 19 classes of parallel segments.
Fixture branching_configuration();

// One path weaving through five nested segments of eccentricity 0..4
// (the last along C_4); rings 0..5 over 24 angles, ring 5 outside.
Fixture zigzag_configuration();

// Rings 0..r+1 over `angles` angles; C_0..C_r are the cycles and ring r+1
// carries terminals. `diagonals` random quadrilateral diagonals are added.
struct PolarHost {
  PlaneGraph g;
  ConcentricCycles cycles;
  std::vector<Vertex> outer_ring;
};
PolarHost polar_host(int r, int angles, int diagonals, std::uint64_t seed);

// Tightened cycles of a polar host plus an oracle-cheapest linkage for
// `paths` random pairs on the terminal ring. nullopt when the pairs are not
// linkable or an oracle runs out of budget.
std::optional<Fixture> cheap_configuration(int r, int angles, int diagonals, int paths, std::uint64_t seed);

}  // namespace pdpp::testing
