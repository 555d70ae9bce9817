#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drawkit/drawing.hpp"

namespace drawkit {

struct SimpleViolation {
  int edge_e = -1;
  int edge_f = -1;
  std::string reason;  // "parallel", "adjacent crossing", "double crossing"
};

std::optional<SimpleViolation> find_simple_violation(const Drawing& d);
bool is_simple(const Drawing& d);

struct CommonPoint {
  bool is_vertex = false;
  int id = -1;  // vertex or crossing index
  bool operator==(const CommonPoint&) const = default;
};

struct Lens {
  int edge_e = -1;
  int edge_f = -1;
  CommonPoint p;
  CommonPoint q;
  int e_first_segment = 0;  // arcs as half-open segment ranges
  int e_last_segment = 0;
  int f_first_segment = 0;
  int f_last_segment = 0;
  bool empty = false;
  std::optional<CommonPoint> witness;       // strictly inside, when not empty
  std::vector<CommonPoint> left_interior;   // points left of the e-arc
  std::vector<CommonPoint> right_interior;  // points right of the e-arc
};

// Every lens, with its interior content on both sides.
std::vector<Lens> find_lenses(const Drawing& d);
std::vector<Lens> find_empty_lenses(const Drawing& d);
bool is_non_homotopic(const Drawing& d);

struct FilledWitness {
  int cell = -1;
  int u = -1;
  int v = -1;
};

std::optional<FilledWitness> find_unfilled_pair(const Drawing& d);
bool is_filled(const Drawing& d);
int max_distinct_vertices_per_cell(const Drawing& d);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;     // 0 white, 1 black
  std::vector<int> odd_walk;  // closed walk of odd length when not bipartite
};

Bipartition bipartition(const Drawing& d);

}  // namespace drawkit
