#pragma once

#include <array>
#include <optional>
#include <vector>

#include "drawkit/drawing.hpp"

namespace drawkit {

// Three edges that pairwise cross, when the drawing is not quasiplanar.
std::optional<std::array<int, 3>> find_crossing_triangle(const Drawing& d);
bool is_quasiplanar(const Drawing& d);

// An edge whose crossing edges have no common endpoint.
std::optional<int> find_fan_violation(const Drawing& d);
bool is_fan_crossing(const Drawing& d);

std::vector<int> crossings_per_edge(const Drawing& d);
bool is_k_planar(const Drawing& d, int k);

int real_face_level(const Drawing& d);
bool is_k_plus_real_face(const Drawing& d, int k);

struct ClassReport {
  bool simple = false;
  bool non_homotopic = false;
  bool quasiplanar = false;
  bool fan_crossing = false;
  bool filled = false;
  bool bipartite = false;
  int max_crossings_per_edge = 0;  // smallest k with k-planarity
  int real_face_level = 0;
  int max_distinct_vertices_per_cell = 0;
  int empty_lenses = 0;
};

ClassReport class_report(const Drawing& d);

}  // namespace drawkit
