#include <algorithm>
#include <set>

#include "drawkit/drawing.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/properties.hpp"

namespace drawkit {

LinkResult link_of_vertex(const Drawing& d, int v) {
  if (v < 0 || v >= d.vertex_count()) throw Error(ErrorKind::UnknownReference, "no such vertex");
  if (d.vertex_count() < 3) throw Error(ErrorKind::PreconditionFailed, "link needs at least three vertices");
  if (!is_non_homotopic(d)) throw Error(ErrorKind::PreconditionFailed, "link needs a non-homotopic drawing");

  const Planarization& p = d.planarization;
  LinkResult result;
  std::set<int> seen;
  for (int dart : p.rotation[v]) {
    const int cell = d.cell_of_dart[dart];
    result.incident_cells.push_back(cell);
    seen.insert(cell);
  }
  if (seen.size() != result.incident_cells.size()) {
    throw Error(ErrorKind::PreconditionFailed,
                "vertex '" + d.vertex_ids[v] + "' meets some cell at two of its angles");
  }
  // Beyond the first crossing of each crossed edge, both sides must lie outside the cells at v;
  // otherwise cutting the edge there merges further cells into the link.
  for (const EdgeEnd& end : d.vertex_rotations[v]) {
    const Edge& e = d.edges[end.edge];
    const int m = static_cast<int>(e.crossings.size());
    if (m == 0) continue;
    const int beyond = end.at_target ? m - 1 : 1;
    for (bool forward : {true, false}) {
      if (seen.count(d.cell_of_dart[p.dart(end.edge, beyond, forward)])) {
        throw Error(ErrorKind::PreconditionFailed, "a cell at vertex '" + d.vertex_ids[v] +
                                                       "' also lies beyond the first crossing on edge '" + e.id + "'");
      }
    }
  }
  for (int cell : result.incident_cells) result.predicted_size += d.cells[cell].size - 5;
  result.predicted_size += static_cast<long long>(result.incident_cells.size());

  // Crossings closest to v on its crossed edges disappear with v.
  std::vector<bool> removed_crossing(d.crossing_count(), false);
  std::vector<bool> dropped_edge(d.edge_count(), false);
  for (const EdgeEnd& end : d.vertex_rotations[v]) {
    const Edge& e = d.edges[end.edge];
    if (e.crossings.empty()) {
      dropped_edge[end.edge] = true;
    } else {
      removed_crossing[end.at_target ? e.crossings.back() : e.crossings.front()] = true;
    }
  }

  std::set<std::string> taken(d.vertex_ids.begin(), d.vertex_ids.end());
  DrawingSpec spec;
  spec.surface = Surface::sphere;
  for (int u = 0; u < d.vertex_count(); ++u) {
    if (u != v) spec.vertices.push_back({d.vertex_ids[u], 0});
  }
  std::vector<std::string> subdivision_id(d.edge_count());
  for (const EdgeEnd& end : d.vertex_rotations[v]) {
    if (dropped_edge[end.edge]) continue;
    std::string id = d.vertex_ids[v] + "~" + d.edges[end.edge].id;
    while (taken.count(id)) id += "'";
    taken.insert(id);
    subdivision_id[end.edge] = id;
    spec.vertices.push_back({id, 0});
  }

  // New positions of surviving crossings along each edge.
  std::vector<std::vector<int>> new_pos(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) {
    if (dropped_edge[e]) continue;
    const Edge& edge = d.edges[e];
    DrawingSpec::EdgeLine line{edge.id, d.vertex_ids[edge.source], d.vertex_ids[edge.target], {}, 0};
    if (edge.source == v) line.source = subdivision_id[e];
    if (edge.target == v) line.target = subdivision_id[e];
    new_pos[e].assign(edge.crossings.size(), -1);
    for (std::size_t i = 0; i < edge.crossings.size(); ++i) {
      const int x = edge.crossings[i];
      if (removed_crossing[x]) continue;
      new_pos[e][i] = static_cast<int>(line.crossings.size());
      line.crossings.push_back(d.crossings[x].id);
    }
    spec.edges.push_back(std::move(line));
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (removed_crossing[x]) continue;
    const Crossing& c = d.crossings[x];
    spec.crossings.push_back({c.id, d.edges[c.edge_a].id, d.edges[c.edge_b].id, 0});
    DrawingSpec::CrossingRotation rot{c.id, {}, 0};
    for (const SegmentEnd& se : d.crossing_rotations[x]) {
      const int pos = d.position_in(x, se.edge);
      const bool toward_target = se.segment == pos + 1;
      rot.ends.push_back({d.edges[se.edge].id, new_pos[se.edge][pos] + (toward_target ? 1 : 0)});
    }
    spec.crossing_rotations.push_back(std::move(rot));
  }
  for (int u = 0; u < d.vertex_count(); ++u) {
    if (u == v) continue;
    DrawingSpec::VertexRotation rot{d.vertex_ids[u], {}, 0};
    for (const EdgeEnd& end : d.vertex_rotations[u]) {
      if (!dropped_edge[end.edge]) rot.ends.push_back({d.edges[end.edge].id, end.at_target});
    }
    if (!rot.ends.empty()) spec.vertex_rotations.push_back(std::move(rot));
  }
  for (const EdgeEnd& end : d.vertex_rotations[v]) {
    if (dropped_edge[end.edge]) continue;
    spec.vertex_rotations.push_back({subdivision_id[end.edge], {{d.edges[end.edge].id, end.at_target}}, 0});
  }

  try {
    result.residual = build_drawing(spec);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DisconnectedPlanarization) throw;
    throw Error(ErrorKind::PreconditionFailed, "removing vertex '" + d.vertex_ids[v] + "' disconnects the drawing");
  }
  const Drawing& r = result.residual;
  const Planarization& rp = r.planarization;

  // Any surviving boundary dart of a cell at v still has the link on its left.
  int dart = -1;
  const Planarization& p_old = d.planarization;
  for (int cell : result.incident_cells) {
    for (int old : d.cells[cell].darts) {
      const Segment& s = p_old.segments[Planarization::segment_of(old)];
      const Edge& edge = d.edges[s.edge];
      if (dropped_edge[s.edge]) continue;
      const int m = static_cast<int>(edge.crossings.size());
      if ((edge.source == v && s.index == 0) || (edge.target == v && s.index == m)) continue;
      int index = 0;
      for (int i = 0; i < s.index; ++i) {
        if (!removed_crossing[edge.crossings[i]]) ++index;
      }
      dart = rp.dart(r.edge_index.at(edge.id), index, Planarization::is_forward(old));
      break;
    }
    if (dart >= 0) break;
  }
  if (dart < 0) throw Error(ErrorKind::PreconditionFailed, "no boundary of the cells at the vertex survives its removal");
  result.link_cell = r.cell_of_dart[dart];
  result.link_size = r.cells[result.link_cell].size;
  return result;
}

}  // namespace drawkit
