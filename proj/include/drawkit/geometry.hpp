#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drawkit/density.hpp"
#include "drawkit/drawing.hpp"
#include "drawkit/rational.hpp"

namespace drawkit {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point&) const = default;
};

struct GeomEdge {
  std::string id;
  int source = -1;
  int target = -1;
  std::vector<Point> bends;
};

struct GeomDrawing {
  std::vector<std::string> vertex_ids;
  std::vector<Point> points;
  std::vector<GeomEdge> edges;

  // Source point, bends, target point.
  std::vector<Point> polyline(int edge) const;
};

struct CrossingEvent {
  int edge_a = -1;
  int edge_b = -1;
  Point at;
  int piece_a = 0;  // polyline piece of each edge containing the crossing
  int piece_b = 0;
  Rational param_a;  // position within that piece, strictly between 0 and 1
  Rational param_b;
};

struct Arrangement {
  std::vector<CrossingEvent> crossings;
  std::vector<std::vector<int>> along_edge;  // crossing indices ordered from source to target
};

// Throws DegenerateContact on touching, overlap, triple points, vertices on
// edges and self-intersecting polylines.
Arrangement compute_arrangement(const GeomDrawing& g);

// Crossing i of the result is arrangement crossing i. Plane drawings get the
// unbounded cell as outer cell.
Drawing to_combinatorial(const GeomDrawing& g, Surface surface = Surface::plane);

// Points of one edge-segment from its start node to its end node, bends included.
std::vector<Point> segment_path(const GeomDrawing& g, const Arrangement& arr, int edge, int segment);

// Twice the signed area enclosed by a cell's boundary walk; negative for the unbounded cell.
Rational cell_double_area(const GeomDrawing& g, const Arrangement& arr, const Drawing& d, int cell);

struct RacReport {
  bool rac = false;
  std::vector<int> bends;               // per edge
  std::vector<bool> right_angle;        // per crossing
};

RacReport is_rac(const GeomDrawing& g, int k);
RacCertificate rac_certificate(const GeomDrawing& g);

// Bend corners on the boundary of a bounded cell whose interior angle is convex.
// `d` must come from to_combinatorial(g). Throws UnboundedCell.
int convex_bend_corners(const GeomDrawing& g, const Drawing& d, int cell);

// Faces of the arrangement computed straight from the geometry, as
// (vertex incidences, segment incidences), sorted.
std::vector<std::pair<int, int>> geometric_cells(const GeomDrawing& g);

// Seeded drawing on random grid points whose planarization is connected.
GeomDrawing random_geom_drawing(std::uint64_t seed, int n, double edge_probability, int bend_budget);

}  // namespace drawkit
