#include "drawkit/classes.hpp"

#include <algorithm>
#include <set>

#include "drawkit/properties.hpp"

namespace drawkit {

namespace {

std::vector<std::set<int>> crossing_partners(const Drawing& d) {
  std::vector<std::set<int>> out(d.edge_count());
  for (const Crossing& c : d.crossings) {
    out[c.edge_a].insert(c.edge_b);
    out[c.edge_b].insert(c.edge_a);
  }
  return out;
}

}  // namespace

std::optional<std::array<int, 3>> find_crossing_triangle(const Drawing& d) {
  const auto partners = crossing_partners(d);
  for (int a = 0; a < d.edge_count(); ++a) {
    for (int b : partners[a]) {
      if (b <= a) continue;
      for (int c : partners[b]) {
        if (c <= b) continue;
        if (partners[a].count(c)) return std::array<int, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

bool is_quasiplanar(const Drawing& d) { return !find_crossing_triangle(d).has_value(); }

std::optional<int> find_fan_violation(const Drawing& d) {
  const auto partners = crossing_partners(d);
  for (int e = 0; e < d.edge_count(); ++e) {
    if (partners[e].empty()) continue;
    std::set<int> common;
    bool first = true;
    for (int f : partners[e]) {
      std::set<int> ends{d.edges[f].source, d.edges[f].target};
      if (first) {
        common = ends;
        first = false;
      } else {
        std::set<int> keep;
        for (int v : common) {
          if (ends.count(v)) keep.insert(v);
        }
        common = std::move(keep);
      }
    }
    if (common.empty()) return e;
  }
  return std::nullopt;
}

bool is_fan_crossing(const Drawing& d) { return !find_fan_violation(d).has_value(); }

std::vector<int> crossings_per_edge(const Drawing& d) {
  std::vector<int> out;
  for (const Edge& e : d.edges) out.push_back(static_cast<int>(e.crossings.size()));
  return out;
}

bool is_k_planar(const Drawing& d, int k) {
  for (const Edge& e : d.edges) {
    if (static_cast<int>(e.crossings.size()) > k) return false;
  }
  return true;
}

int real_face_level(const Drawing& d) {
  int level = d.cells.empty() ? 0 : d.cells.front().vertex_incidences;
  for (const Cell& c : d.cells) level = std::min(level, c.vertex_incidences);
  return level;
}

bool is_k_plus_real_face(const Drawing& d, int k) { return real_face_level(d) >= k; }

ClassReport class_report(const Drawing& d) {
  ClassReport r;
  r.simple = is_simple(d);
  r.empty_lenses = static_cast<int>(find_empty_lenses(d).size());
  r.non_homotopic = r.empty_lenses == 0;
  r.quasiplanar = is_quasiplanar(d);
  r.fan_crossing = is_fan_crossing(d);
  r.filled = is_filled(d);
  r.bipartite = bipartition(d).bipartite;
  for (const Edge& e : d.edges) r.max_crossings_per_edge = std::max(r.max_crossings_per_edge, static_cast<int>(e.crossings.size()));
  r.real_face_level = real_face_level(d);
  r.max_distinct_vertices_per_cell = max_distinct_vertices_per_cell(d);
  return r;
}

}  // namespace drawkit
