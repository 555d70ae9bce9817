#include "drawkit/report.hpp"

#include <sstream>

#include "drawkit/errors.hpp"
#include "drawkit/properties.hpp"

namespace drawkit {

namespace {

std::string point_name(const Drawing& d, const CommonPoint& p) {
  return p.is_vertex ? d.vertex_ids[p.id] : d.crossings[p.id].id;
}

CheckOutcome check_simple(const Drawing& d) {
  CheckOutcome c{"simple", true, ""};
  if (auto v = find_simple_violation(d)) {
    c.holds = false;
    c.witness = v->reason + " between " + d.edges[v->edge_e].id + " and " + d.edges[v->edge_f].id;
  }
  return c;
}

CheckOutcome check_non_homotopic(const Drawing& d) {
  CheckOutcome c{"non-homotopic", true, ""};
  const auto empty = find_empty_lenses(d);
  if (!empty.empty()) {
    const Lens& l = empty.front();
    c.holds = false;
    c.witness = "empty lens of " + d.edges[l.edge_e].id + " and " + d.edges[l.edge_f].id + " between " +
                point_name(d, l.p) + " and " + point_name(d, l.q);
  }
  return c;
}

CheckOutcome check_quasiplanar(const Drawing& d) {
  CheckOutcome c{"quasiplanar", true, ""};
  if (auto t = find_crossing_triangle(d)) {
    c.holds = false;
    c.witness = "pairwise crossing edges " + d.edges[(*t)[0]].id + ", " + d.edges[(*t)[1]].id + ", " + d.edges[(*t)[2]].id;
  }
  return c;
}

CheckOutcome check_fan(const Drawing& d) {
  CheckOutcome c{"fan-crossing", true, ""};
  if (auto e = find_fan_violation(d)) {
    c.holds = false;
    c.witness = "edges crossing " + d.edges[*e].id + " share no endpoint";
  }
  return c;
}

CheckOutcome check_k_planar(const Drawing& d, int k) {
  CheckOutcome c{std::to_string(k) + "-planar", true, ""};
  const auto per_edge = crossings_per_edge(d);
  for (int e = 0; e < d.edge_count(); ++e) {
    if (per_edge[e] > k) {
      c.holds = false;
      c.witness = "edge " + d.edges[e].id + " has " + std::to_string(per_edge[e]) + " crossings";
      break;
    }
  }
  return c;
}

CheckOutcome check_real_face(const Drawing& d, int k) {
  CheckOutcome c{std::to_string(k) + "+-real-face", true, ""};
  for (const Cell& cell : d.cells) {
    if (cell.vertex_incidences < k) {
      c.holds = false;
      c.witness = "cell " + std::to_string(cell.id) + " has " + std::to_string(cell.vertex_incidences) +
                  " vertex incidences";
      break;
    }
  }
  return c;
}

CheckOutcome check_rac(const GeomDrawing* g, int k) {
  if (!g) throw Error(ErrorKind::PreconditionFailed, "RAC classes need a .geo drawing");
  CheckOutcome c{std::to_string(k) + "-bend RAC", true, ""};
  const RacReport r = is_rac(*g, k);
  if (r.rac) return c;
  c.holds = false;
  for (std::size_t e = 0; e < r.bends.size(); ++e) {
    if (r.bends[e] > k) {
      c.witness = "edge " + g->edges[e].id + " has " + std::to_string(r.bends[e]) + " bends";
      return c;
    }
  }
  for (std::size_t x = 0; x < r.right_angle.size(); ++x) {
    if (!r.right_angle[x]) {
      c.witness = "crossing " + std::to_string(x) + " is not at a right angle";
      return c;
    }
  }
  return c;
}

std::string fraction(const Rational& r) { return to_fraction(r); }

}  // namespace

std::vector<CheckOutcome> run_checks(const Drawing& d, const GeomDrawing* geometry, const CheckRequest& request) {
  std::vector<CheckOutcome> out;
  if (request.simple) out.push_back(check_simple(d));
  if (request.non_homotopic) out.push_back(check_non_homotopic(d));
  if (!request.cls) return out;
  if (*request.cls == "k-planar") {
    if (!request.k) throw Error(ErrorKind::PreconditionFailed, "k-planar needs --k");
    out.push_back(check_k_planar(d, *request.k));
    return out;
  }
  switch (parse_drawing_class(*request.cls)) {
    case DrawingClass::rac0:
      out.push_back(check_rac(geometry, 0));
      break;
    case DrawingClass::rac1:
      out.push_back(check_rac(geometry, 1));
      break;
    case DrawingClass::rac2:
      out.push_back(check_rac(geometry, 2));
      break;
    case DrawingClass::fan_crossing:
      out.push_back(check_fan(d));
      break;
    case DrawingClass::bipartite_fan_crossing: {
      out.push_back(check_fan(d));
      const Bipartition b = bipartition(d);
      CheckOutcome c{"bipartite", b.bipartite, ""};
      if (!b.bipartite) {
        c.witness = "odd closed walk";
        for (int v : b.odd_walk) c.witness += " " + d.vertex_ids[v];
      }
      out.push_back(c);
      break;
    }
    case DrawingClass::quasiplanar:
      out.push_back(check_quasiplanar(d));
      break;
    case DrawingClass::real_face:
      if (!request.k) throw Error(ErrorKind::PreconditionFailed, "real-face needs --k");
      out.push_back(check_real_face(d, *request.k));
      break;
    case DrawingClass::one_planar:
      out.push_back(check_k_planar(d, 1));
      break;
    case DrawingClass::two_planar:
      out.push_back(check_k_planar(d, 2));
      break;
  }
  return out;
}

nlohmann::json drawing_json(const Drawing& d) {
  const DrawingStats s = compute_stats(d);
  nlohmann::json j;
  j["surface"] = d.surface == Surface::plane ? "plane" : "sphere";
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["crossed_edges"] = s.crossed_edges;
  j["crossings"] = s.crossings;
  j["segments"] = s.segments;
  j["cells"] = s.cells;
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [size, count] : s.size_histogram) hist.push_back({{"size", size}, {"count", count}});
  j["cell_histogram"] = hist;
  nlohmann::json kinds = nlohmann::json::object();
  for (int k = 0; k < kCellKindCount; ++k) kinds[cell_kind_name(static_cast<CellKind>(k))] = s.kind_counts[k];
  j["cell_kinds"] = kinds;
  return j;
}

nlohmann::json class_json(const ClassReport& r) {
  return {{"simple", r.simple},
          {"non_homotopic", r.non_homotopic},
          {"quasiplanar", r.quasiplanar},
          {"fan_crossing", r.fan_crossing},
          {"filled", r.filled},
          {"bipartite", r.bipartite},
          {"max_crossings_per_edge", r.max_crossings_per_edge},
          {"real_face_level", r.real_face_level},
          {"max_distinct_vertices_per_cell", r.max_distinct_vertices_per_cell},
          {"empty_lenses", r.empty_lenses}};
}

nlohmann::json check_json(const CheckOutcome& c) {
  nlohmann::json j{{"name", c.name}, {"holds", c.holds}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

nlohmann::json density_json(const DensityEvaluation& e) {
  nlohmann::json j{{"t", fraction(e.t)},
                   {"edges", e.edges},
                   {"vertex_term", fraction(e.vertex_term)},
                   {"cell_term", fraction(e.cell_term)},
                   {"crossing_term", fraction(e.crossing_term)},
                   {"rhs", fraction(e.rhs)},
                   {"residual", fraction(e.residual)},
                   {"cells_size3", e.c3},
                   {"cells_size4", e.c4},
                   {"cells_size5", e.c5},
                   {"cells_below3", e.below3},
                   {"excess", e.excess},
                   {"four_bound", fraction(e.four_bound)},
                   {"five_rhs", fraction(e.five_rhs)}};
  if (e.r) j["r"] = fraction(*e.r);
  return j;
}

nlohmann::json inequality_json(const InequalityReport& r) {
  nlohmann::json pre = nlohmann::json::array();
  for (const auto& p : r.preconditions) pre.push_back({{"name", p.name}, {"holds", p.holds}});
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& x : r.relations) {
    rel.push_back({{"label", x.label},
                   {"lhs", fraction(x.lhs)},
                   {"op", x.op},
                   {"rhs", fraction(x.rhs)},
                   {"applicable", x.applicable},
                   {"holds", x.holds}});
  }
  return {{"id", r.id},   {"applicable", r.applicable}, {"holds", r.holds}, {"tight", r.tight},
          {"preconditions", pre}, {"relations", rel},         {"notes", r.notes}};
}

std::string drawing_text(const Drawing& d) {
  const DrawingStats s = compute_stats(d);
  std::ostringstream out;
  out << "surface " << (d.surface == Surface::plane ? "plane" : "sphere") << "\n"
      << "vertices " << s.vertices << "  edges " << s.edges << "  crossings " << s.crossings << "  cells " << s.cells
      << "\n"
      << "cell sizes:";
  for (const auto& [size, count] : s.size_histogram) out << " " << size << "x" << count;
  out << "\ncell kinds:";
  for (int k = 0; k < kCellKindCount; ++k) {
    if (s.kind_counts[k]) out << " " << cell_kind_name(static_cast<CellKind>(k)) << "=" << s.kind_counts[k];
  }
  out << "\n";
  return out.str();
}

std::string class_text(const ClassReport& r) {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "simple " << yn(r.simple) << "  non-homotopic " << yn(r.non_homotopic) << "  quasiplanar "
      << yn(r.quasiplanar) << "  fan-crossing " << yn(r.fan_crossing) << "  filled " << yn(r.filled)
      << "  bipartite " << yn(r.bipartite) << "\n"
      << "max crossings per edge " << r.max_crossings_per_edge << "  real-face level " << r.real_face_level
      << "  max distinct vertices per cell " << r.max_distinct_vertices_per_cell << "  empty lenses "
      << r.empty_lenses << "\n";
  return out.str();
}

std::string check_text(const CheckOutcome& c) {
  std::string s = c.name + ": " + (c.holds ? "pass" : "FAIL");
  if (!c.witness.empty()) s += " (" + c.witness + ")";
  return s + "\n";
}

std::string density_text(const DensityEvaluation& e) {
  std::ostringstream out;
  out << "t = " << to_string(e.t) << ": |E| = " << e.edges << ", rhs = " << to_string(e.vertex_term) << " - "
      << to_string(e.cell_term) << " - " << to_string(e.crossing_term) << " = " << to_string(e.rhs)
      << ", residual " << to_string(e.residual);
  if (e.r) out << ", r = " << to_string(*e.r);
  out << "\n";
  return out.str();
}

std::string inequality_text(const InequalityReport& r) {
  std::ostringstream out;
  out << r.id << ": ";
  if (!r.applicable) {
    out << "not applicable (";
    bool first = true;
    for (const auto& p : r.preconditions) {
      if (p.holds) continue;
      out << (first ? "" : ", ") << p.name;
      first = false;
    }
    out << ")\n";
    return out.str();
  }
  out << (r.holds ? "holds" : "VIOLATED") << (r.tight ? ", tight" : "") << "\n";
  for (const auto& x : r.relations) {
    if (!x.applicable) continue;
    out << "  " << x.label << ": " << to_string(x.lhs) << " " << x.op << " " << to_string(x.rhs)
        << (x.holds ? "" : "  <- violated") << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace drawkit
