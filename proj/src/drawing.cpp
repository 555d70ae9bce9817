#include "drawkit/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "drawkit/errors.hpp"

namespace drawkit {

int Planarization::origin(int dart) const {
  const Segment& s = segments[segment_of(dart)];
  return is_forward(dart) ? s.tail : s.head;
}

int Planarization::destination(int dart) const { return origin(twin(dart)); }

int Planarization::rot_next(int dart) const {
  const auto& rot = rotation[origin(dart)];
  return rot[(rotation_pos[dart] + 1) % rot.size()];
}

int Planarization::rot_prev(int dart) const {
  const auto& rot = rotation[origin(dart)];
  return rot[(rotation_pos[dart] + rot.size() - 1) % rot.size()];
}

const char* cell_kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::TRI3: return "TRI3";
    case CellKind::A4: return "A4";
    case CellKind::Q4: return "Q4";
    case CellKind::D5: return "D5";
    case CellKind::W5: return "W5";
    case CellKind::P5: return "P5";
    case CellKind::T6: return "T6";
    case CellKind::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::string to_string(const CellClass& cls) {
  std::string out = cell_kind_name(cls.kind);
  if (cls.kind == CellKind::OTHER) out += "(" + std::to_string(cls.size) + ")";
  if (cls.degenerate) out += "*";
  return out;
}

CellClass classify_cell(const Cell& cell) {
  CellClass cls;
  cls.size = cell.size;
  const int nv = cell.vertex_incidences;
  const int ns = cell.segment_incidences;
  std::set<std::pair<int, int>> nodes;
  bool repeated = false;
  for (const auto& inc : cell.walk) {
    if (inc.kind == Incidence::Kind::segment) continue;
    if (!nodes.insert({static_cast<int>(inc.kind), inc.id}).second) repeated = true;
  }
  if (nv == 0 && ns == 3) cls.kind = CellKind::TRI3;
  else if (nv == 1 && ns == 3) cls.kind = CellKind::A4;
  else if (nv == 0 && ns == 4) cls.kind = CellKind::Q4;
  else if (nv == 2 && ns == 3) cls.kind = CellKind::D5;
  else if (nv == 1 && ns == 4) cls.kind = CellKind::W5;
  else if (nv == 0 && ns == 5) cls.kind = CellKind::P5;
  else if (nv == 3 && ns == 3 && cell.distinct_vertices.size() == 3) cls.kind = CellKind::T6;
  if (cls.kind == CellKind::Q4 || cls.kind == CellKind::W5 || cls.kind == CellKind::P5) {
    cls.degenerate = repeated;
  }
  return cls;
}

int Drawing::other_endpoint(int edge, int v) const {
  const Edge& e = edges[edge];
  return e.source == v ? e.target : e.source;
}

int Drawing::position_in(int x, int e) const {
  const Crossing& c = crossings[x];
  return c.edge_a == e ? c.pos_a : c.pos_b;
}

int Drawing::other_edge(int x, int e) const {
  const Crossing& c = crossings[x];
  return c.edge_a == e ? c.edge_b : c.edge_a;
}

bool Drawing::same_embedding(const Drawing& other) const {
  return surface == other.surface && outer_dart == other.outer_dart &&
         vertex_ids == other.vertex_ids && edges == other.edges &&
         crossings == other.crossings && vertex_rotations == other.vertex_rotations &&
         crossing_rotations == other.crossing_rotations;
}

namespace {

void build_planarization(Drawing& d) {
  Planarization& p = d.planarization;
  const int nv = d.vertex_count();
  p.vertex_count = nv;
  p.node_count = nv + d.crossing_count();
  p.segments.clear();
  p.first_segment.assign(d.edge_count(), 0);
  for (int e = 0; e < d.edge_count(); ++e) {
    const Edge& edge = d.edges[e];
    p.first_segment[e] = static_cast<int>(p.segments.size());
    const int m = static_cast<int>(edge.crossings.size());
    for (int i = 0; i <= m; ++i) {
      int tail = i == 0 ? edge.source : nv + edge.crossings[i - 1];
      int head = i == m ? edge.target : nv + edge.crossings[i];
      p.segments.push_back({e, i, tail, head});
    }
  }
  p.rotation.assign(p.node_count, {});
  for (int v = 0; v < nv; ++v) {
    for (const EdgeEnd& end : d.vertex_rotations[v]) {
      const int m = static_cast<int>(d.edges[end.edge].crossings.size());
      p.rotation[v].push_back(end.at_target ? p.dart(end.edge, m, false) : p.dart(end.edge, 0, true));
    }
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    for (const SegmentEnd& se : d.crossing_rotations[x]) {
      const int pos = d.position_in(x, se.edge);
      p.rotation[nv + x].push_back(p.dart(se.edge, se.segment, se.segment != pos));
    }
  }
  p.rotation_pos.assign(p.dart_count(), -1);
  for (const auto& rot : p.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) p.rotation_pos[rot[i]] = static_cast<int>(i);
  }
}

void trace_cells(Drawing& d) {
  const Planarization& p = d.planarization;
  d.cells.clear();
  d.cell_of_dart.assign(p.dart_count(), -1);
  if (p.segments.empty()) {
    Cell cell;
    cell.id = 0;
    cell.walk.push_back({Incidence::Kind::vertex, 0});
    cell.size = 1;
    cell.vertex_incidences = 1;
    cell.distinct_vertices = {0};
    cell.cls = classify_cell(cell);
    d.cells.push_back(cell);
    return;
  }
  for (int start = 0; start < p.dart_count(); ++start) {
    if (d.cell_of_dart[start] >= 0) continue;
    Cell cell;
    cell.id = static_cast<int>(d.cells.size());
    int dart = start;
    do {
      d.cell_of_dart[dart] = cell.id;
      cell.darts.push_back(dart);
      const int node = p.origin(dart);
      if (p.is_vertex(node)) {
        cell.walk.push_back({Incidence::Kind::vertex, node});
        ++cell.vertex_incidences;
        cell.distinct_vertices.push_back(node);
      } else {
        cell.walk.push_back({Incidence::Kind::crossing, node - p.vertex_count});
        ++cell.crossing_incidences;
      }
      cell.walk.push_back({Incidence::Kind::segment, dart});
      ++cell.segment_incidences;
      dart = p.face_next(dart);
    } while (dart != start);
    cell.size = cell.vertex_incidences + cell.segment_incidences;
    std::sort(cell.distinct_vertices.begin(), cell.distinct_vertices.end());
    cell.distinct_vertices.erase(
        std::unique(cell.distinct_vertices.begin(), cell.distinct_vertices.end()),
        cell.distinct_vertices.end());
    cell.cls = classify_cell(cell);
    d.cells.push_back(std::move(cell));
  }
}

bool planarization_connected(const Drawing& d) {
  const Planarization& p = d.planarization;
  std::vector<int> parent(p.node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int components = p.node_count;
  for (const Segment& s : p.segments) {
    int a = find(s.tail), b = find(s.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::string end_name(const Drawing& d, const EdgeEnd& end) {
  return d.edges[end.edge].id + (end.at_target ? "@t" : "@s");
}

}  // namespace

Drawing build_drawing(const DrawingSpec& spec) {
  Drawing d;
  d.surface = spec.surface;
  if (spec.vertices.empty()) throw Error(ErrorKind::Syntax, "drawing has no vertices");

  for (const auto& v : spec.vertices) {
    if (!d.vertex_index.emplace(v.id, d.vertex_count()).second) {
      throw Error(ErrorKind::DuplicateId, "vertex '" + v.id + "' declared twice", v.line);
    }
    d.vertex_ids.push_back(v.id);
  }

  auto lookup_vertex = [&](const std::string& id, int line) {
    auto it = d.vertex_index.find(id);
    if (it == d.vertex_index.end()) {
      throw Error(ErrorKind::UnknownReference, "unknown vertex '" + id + "'", line);
    }
    return it->second;
  };

  for (const auto& e : spec.edges) {
    if (!d.edge_index.emplace(e.id, d.edge_count()).second) {
      throw Error(ErrorKind::DuplicateId, "edge '" + e.id + "' declared twice", e.line);
    }
    Edge edge;
    edge.id = e.id;
    edge.source = lookup_vertex(e.source, e.line);
    edge.target = lookup_vertex(e.target, e.line);
    if (edge.source == edge.target) {
      throw Error(ErrorKind::LoopEdge, "edge '" + e.id + "' is a loop at '" + e.source + "'", e.line);
    }
    d.edges.push_back(std::move(edge));
  }

  auto lookup_edge = [&](const std::string& id, int line) {
    auto it = d.edge_index.find(id);
    if (it == d.edge_index.end()) {
      throw Error(ErrorKind::UnknownReference, "unknown edge '" + id + "'", line);
    }
    return it->second;
  };

  for (const auto& c : spec.crossings) {
    if (!d.crossing_index.emplace(c.id, d.crossing_count()).second) {
      throw Error(ErrorKind::DuplicateId, "crossing '" + c.id + "' declared twice", c.line);
    }
    Crossing x;
    x.id = c.id;
    x.edge_a = lookup_edge(c.edge_a, c.line);
    x.edge_b = lookup_edge(c.edge_b, c.line);
    if (x.edge_a == x.edge_b) {
      throw Error(ErrorKind::SelfCrossingEdge, "crossing '" + c.id + "' joins edge '" + c.edge_a + "' with itself", c.line);
    }
    d.crossings.push_back(std::move(x));
  }

  // Every crossing must occur exactly once on each of its two edges.
  std::vector<std::vector<std::pair<int, int>>> occurrences(d.crossing_count());
  for (int e = 0; e < d.edge_count(); ++e) {
    const auto& line = spec.edges[e];
    for (int pos = 0; pos < static_cast<int>(line.crossings.size()); ++pos) {
      const std::string& xid = line.crossings[pos];
      auto it = d.crossing_index.find(xid);
      if (it == d.crossing_index.end()) {
        throw Error(ErrorKind::DanglingCrossing, "edge '" + line.id + "' lists undeclared crossing '" + xid + "'", line.line);
      }
      for (const auto& [oe, opos] : occurrences[it->second]) {
        if (oe == e) {
          throw Error(ErrorKind::SelfCrossingEdge, "edge '" + line.id + "' passes crossing '" + xid + "' twice", line.line);
        }
      }
      occurrences[it->second].push_back({e, pos});
      d.edges[e].crossings.push_back(it->second);
    }
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    Crossing& c = d.crossings[x];
    int found = 0;
    for (const auto& [e, pos] : occurrences[x]) {
      if (e == c.edge_a) {
        c.pos_a = pos;
        ++found;
      } else if (e == c.edge_b) {
        c.pos_b = pos;
        ++found;
      } else {
        throw Error(ErrorKind::DanglingCrossing,
                    "crossing '" + c.id + "' appears on edge '" + d.edges[e].id + "' which it does not join",
                    spec.crossings[x].line);
      }
    }
    if (found != 2 || c.pos_a < 0 || c.pos_b < 0) {
      throw Error(ErrorKind::DanglingCrossing,
                  "crossing '" + c.id + "' must appear once on each of its two edges", spec.crossings[x].line);
    }
  }

  // Vertex rotations.
  std::vector<std::vector<EdgeEnd>> incident(d.vertex_count());
  for (int e = 0; e < d.edge_count(); ++e) {
    incident[d.edges[e].source].push_back({e, false});
    incident[d.edges[e].target].push_back({e, true});
  }
  d.vertex_rotations.assign(d.vertex_count(), {});
  std::vector<bool> has_rotation(d.vertex_count(), false);
  for (const auto& rot : spec.vertex_rotations) {
    const int v = lookup_vertex(rot.vertex, rot.line);
    if (has_rotation[v]) {
      throw Error(ErrorKind::BadRotation, "second rotation for vertex '" + rot.vertex + "'", rot.line);
    }
    has_rotation[v] = true;
    std::vector<EdgeEnd> ends;
    for (const auto& ref : rot.ends) ends.push_back({lookup_edge(ref.edge, rot.line), ref.at_target});
    for (const EdgeEnd& end : ends) {
      if (std::find(incident[v].begin(), incident[v].end(), end) == incident[v].end()) {
        throw Error(ErrorKind::BadRotation, "rotation of '" + rot.vertex + "' lists " + end_name(d, end) + " which does not end there", rot.line);
      }
      if (std::count(ends.begin(), ends.end(), end) > 1) {
        throw Error(ErrorKind::BadRotation, "rotation of '" + rot.vertex + "' repeats " + end_name(d, end), rot.line);
      }
    }
    for (const EdgeEnd& end : incident[v]) {
      if (std::find(ends.begin(), ends.end(), end) == ends.end()) {
        throw Error(ErrorKind::BadRotation, "rotation of '" + rot.vertex + "' misses " + end_name(d, end), rot.line);
      }
    }
    d.vertex_rotations[v] = std::move(ends);
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (has_rotation[v]) continue;
    if (incident[v].size() > 2) {
      throw Error(ErrorKind::BadRotation, "vertex '" + d.vertex_ids[v] + "' of degree " +
                  std::to_string(incident[v].size()) + " has no rotation", spec.vertices[v].line);
    }
    d.vertex_rotations[v] = incident[v];
  }

  // Crossing rotations.
  d.crossing_rotations.assign(d.crossing_count(), {});
  std::vector<bool> has_crossing_rotation(d.crossing_count(), false);
  for (const auto& rot : spec.crossing_rotations) {
    auto it = d.crossing_index.find(rot.crossing);
    if (it == d.crossing_index.end()) {
      throw Error(ErrorKind::UnknownReference, "unknown crossing '" + rot.crossing + "'", rot.line);
    }
    const int x = it->second;
    if (has_crossing_rotation[x]) {
      throw Error(ErrorKind::BadRotation, "second rotation for crossing '" + rot.crossing + "'", rot.line);
    }
    has_crossing_rotation[x] = true;
    if (rot.ends.size() != 4) {
      throw Error(ErrorKind::BadRotation, "rotation of crossing '" + rot.crossing + "' needs four entries", rot.line);
    }
    const Crossing& c = d.crossings[x];
    std::array<SegmentEnd, 4> expected = {SegmentEnd{c.edge_a, c.pos_a}, SegmentEnd{c.edge_a, c.pos_a + 1},
                                          SegmentEnd{c.edge_b, c.pos_b}, SegmentEnd{c.edge_b, c.pos_b + 1}};
    std::array<SegmentEnd, 4> ends;
    for (int i = 0; i < 4; ++i) {
      ends[i] = {lookup_edge(rot.ends[i].edge, rot.line), rot.ends[i].segment};
      if (std::find(expected.begin(), expected.end(), ends[i]) == expected.end()) {
        throw Error(ErrorKind::BadRotation, "rotation of crossing '" + rot.crossing + "' lists " +
                    rot.ends[i].edge + "@" + std::to_string(rot.ends[i].segment) + " which does not end there", rot.line);
      }
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (ends[i] == ends[j]) {
          throw Error(ErrorKind::BadRotation, "rotation of crossing '" + rot.crossing + "' repeats an entry", rot.line);
        }
      }
    }
    for (int i = 0; i < 4; ++i) {
      if (ends[i].edge == ends[(i + 1) % 4].edge) {
        throw Error(ErrorKind::NonAlternatingCrossing, "edges at crossing '" + rot.crossing + "' do not alternate", rot.line);
      }
    }
    d.crossing_rotations[x] = ends;
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (!has_crossing_rotation[x]) {
      throw Error(ErrorKind::BadRotation, "crossing '" + d.crossings[x].id + "' has no rotation", spec.crossings[x].line);
    }
  }

  if (spec.outer_dart) {
    const auto& od = *spec.outer_dart;
    if (d.surface != Surface::plane) {
      throw Error(ErrorKind::Syntax, "outerdart is only meaningful on the plane", od.line);
    }
    const int e = lookup_edge(od.edge, od.line);
    if (od.segment < 0 || od.segment > static_cast<int>(d.edges[e].crossings.size())) {
      throw Error(ErrorKind::UnknownReference, "edge '" + od.edge + "' has no segment " + std::to_string(od.segment), od.line);
    }
    d.outer_dart = OuterDart{e, od.segment, od.forward};
  } else if (d.surface == Surface::plane) {
    throw Error(ErrorKind::Syntax, "plane drawing needs an outerdart");
  }

  build_planarization(d);
  if (!planarization_connected(d)) {
    throw Error(ErrorKind::DisconnectedPlanarization, "planarization is not connected");
  }
  trace_cells(d);
  const long long euler = static_cast<long long>(d.planarization.node_count) -
                          static_cast<long long>(d.planarization.segments.size()) +
                          static_cast<long long>(d.cells.size());
  if (euler != 2) {
    throw Error(ErrorKind::NotSphere, "rotation system has Euler characteristic " + std::to_string(euler) + ", not 2");
  }
  if (d.outer_dart) {
    const int dart = d.planarization.dart(d.outer_dart->edge, d.outer_dart->segment, d.outer_dart->forward);
    d.cells[d.cell_of_dart[dart]].unbounded = true;
  }
  return d;
}

DrawingSpec to_spec(const Drawing& d) {
  DrawingSpec spec;
  spec.surface = d.surface;
  for (const auto& id : d.vertex_ids) spec.vertices.push_back({id, 0});
  for (const Edge& e : d.edges) {
    DrawingSpec::EdgeLine line{e.id, d.vertex_ids[e.source], d.vertex_ids[e.target], {}, 0};
    for (int x : e.crossings) line.crossings.push_back(d.crossings[x].id);
    spec.edges.push_back(std::move(line));
  }
  for (const Crossing& c : d.crossings) {
    spec.crossings.push_back({c.id, d.edges[c.edge_a].id, d.edges[c.edge_b].id, 0});
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.vertex_rotations[v].empty()) continue;
    DrawingSpec::VertexRotation rot{d.vertex_ids[v], {}, 0};
    for (const EdgeEnd& end : d.vertex_rotations[v]) rot.ends.push_back({d.edges[end.edge].id, end.at_target});
    spec.vertex_rotations.push_back(std::move(rot));
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    DrawingSpec::CrossingRotation rot{d.crossings[x].id, {}, 0};
    for (const SegmentEnd& se : d.crossing_rotations[x]) rot.ends.push_back({d.edges[se.edge].id, se.segment});
    spec.crossing_rotations.push_back(std::move(rot));
  }
  if (d.outer_dart) {
    spec.outer_dart = DrawingSpec::OuterLine{d.edges[d.outer_dart->edge].id, d.outer_dart->segment,
                                             d.outer_dart->forward, 0};
  }
  return spec;
}

const Planarization& planarize(const Drawing& d) { return d.planarization; }

const std::vector<Cell>& enumerate_cells(const Drawing& d) { return d.cells; }

int DrawingStats::cells_of_size(int size) const {
  for (const auto& [s, c] : size_histogram) {
    if (s == size) return c;
  }
  return 0;
}

DrawingStats compute_stats(const Drawing& d) {
  DrawingStats st;
  st.vertices = d.vertex_count();
  st.edges = d.edge_count();
  st.crossings = d.crossing_count();
  for (const Edge& e : d.edges) {
    const int m = static_cast<int>(e.crossings.size());
    if (m > 0) {
      ++st.crossed_edges;
      st.inner_segments += m - 1;
    }
  }
  st.planar_edges = st.edges - st.crossed_edges;
  st.segments = static_cast<int>(d.planarization.segments.size());
  st.cells = static_cast<int>(d.cells.size());
  std::vector<int> sizes;
  for (const Cell& c : d.cells) {
    ++st.kind_counts[static_cast<int>(c.cls.kind)];
    sizes.push_back(c.size);
  }
  std::sort(sizes.begin(), sizes.end());
  for (int s : sizes) {
    if (st.size_histogram.empty() || st.size_histogram.back().first != s) st.size_histogram.push_back({s, 0});
    ++st.size_histogram.back().second;
  }
  for (int v = 0; v < d.vertex_count(); ++v) st.degrees.push_back(d.degree(v));
  return st;
}

}  // namespace drawkit
