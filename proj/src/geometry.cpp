#include "drawkit/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "drawkit/errors.hpp"
#include "geometry_internal.hpp"

namespace drawkit {

std::vector<Point> GeomDrawing::polyline(int edge) const {
  const GeomEdge& e = edges[edge];
  std::vector<Point> out;
  out.reserve(e.bends.size() + 2);
  out.push_back(points[e.source]);
  out.insert(out.end(), e.bends.begin(), e.bends.end());
  out.push_back(points[e.target]);
  return out;
}

namespace geom {

int half_plane(const Point& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(const Point& a, const Point& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

Contact intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point d1 = sub(b, a), d2 = sub(d, c), ca = sub(c, a);
  const Rational den = cross(d1, d2);
  Contact out;
  if (den == 0) {
    if (cross(ca, d1) != 0) return out;
    const Rational len = dot(d1, d1);
    const Rational tc = dot(ca, d1) / len;
    const Rational td = dot(sub(d, a), d1) / len;
    const Rational lo = std::max(Rational(0), std::min(tc, td));
    const Rational hi = std::min(Rational(1), std::max(tc, td));
    if (lo > hi) return out;
    if (lo == hi) {
      out.kind = Contact::touch;
      out.at = along(a, b, lo);
      return out;
    }
    out.kind = Contact::overlap;
    return out;
  }
  const Rational t = cross(ca, d2) / den;
  const Rational u = cross(ca, d1) / den;
  if (t < 0 || t > 1 || u < 0 || u > 1) return out;
  out.at = along(a, b, t);
  out.t = t;
  out.u = u;
  out.kind = (t > 0 && t < 1 && u > 0 && u < 1) ? Contact::proper : Contact::touch;
  return out;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(sub(b, a), sub(p, a)) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

std::vector<Piece> pieces_of(const GeomDrawing& g) {
  std::vector<Piece> out;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto line = g.polyline(e);
    const int last = static_cast<int>(line.size()) - 2;
    for (int i = 0; i <= last; ++i) out.push_back({e, i, line[i], line[i + 1], i == 0, i == last});
  }
  return out;
}

std::string describe(const GeomDrawing& g, const Piece& p) { return "edge '" + g.edges[p.edge].id + "'"; }

}  // namespace geom

using namespace geom;

Arrangement compute_arrangement(const GeomDrawing& g) {
  const int n = static_cast<int>(g.points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.points[i] == g.points[j]) {
        throw Error(ErrorKind::DegenerateContact,
                    "vertices '" + g.vertex_ids[i] + "' and '" + g.vertex_ids[j] + "' coincide");
      }
    }
  }
  const std::vector<Piece> pieces = pieces_of(g);
  for (const Piece& p : pieces) {
    if (p.a == p.b) throw Error(ErrorKind::DegenerateContact, describe(g, p) + " has a zero-length piece");
  }
  for (int v = 0; v < n; ++v) {
    for (const Piece& p : pieces) {
      const Point& q = g.points[v];
      if (!on_segment(q, p.a, p.b)) continue;
      const bool at_own_end = (p.a_vertex && p.a == q) || (p.b_vertex && p.b == q);
      if (!at_own_end) {
        throw Error(ErrorKind::DegenerateContact, "vertex '" + g.vertex_ids[v] + "' lies on " + describe(g, p));
      }
    }
  }

  Arrangement arr;
  arr.along_edge.assign(g.edges.size(), {});
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece& p = pieces[i];
      const Piece& q = pieces[j];
      const Contact c = intersect(p.a, p.b, q.a, q.b);
      if (c.kind == Contact::none) continue;
      const bool same_edge = p.edge == q.edge;
      if (c.kind == Contact::overlap) {
        throw Error(ErrorKind::DegenerateContact, describe(g, p) + " overlaps " + describe(g, q));
      }
      if (c.kind == Contact::touch) {
        if (same_edge && q.index == p.index + 1 && c.at == p.b) continue;
        const bool p_vertex_end = (p.a_vertex && p.a == c.at) || (p.b_vertex && p.b == c.at);
        const bool q_vertex_end = (q.a_vertex && q.a == c.at) || (q.b_vertex && q.b == c.at);
        if (!same_edge && p_vertex_end && q_vertex_end) continue;
        throw Error(ErrorKind::DegenerateContact, describe(g, p) + " touches " + describe(g, q));
      }
      if (same_edge) throw Error(ErrorKind::DegenerateContact, describe(g, p) + " crosses itself");
      arr.crossings.push_back({p.edge, q.edge, c.at, p.index, q.index, c.t, c.u});
    }
  }

  std::map<std::pair<Rational, Rational>, int> seen;
  for (int x = 0; x < static_cast<int>(arr.crossings.size()); ++x) {
    const CrossingEvent& c = arr.crossings[x];
    auto [it, fresh] = seen.emplace(std::make_pair(c.at.x, c.at.y), x);
    if (!fresh) {
      throw Error(ErrorKind::DegenerateContact, "three or more edges meet at (" + to_string(c.at.x) + ", " +
                                                    to_string(c.at.y) + ")");
    }
    arr.along_edge[c.edge_a].push_back(x);
    arr.along_edge[c.edge_b].push_back(x);
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto key = [&](int x) {
      const CrossingEvent& c = arr.crossings[x];
      return c.edge_a == e ? std::make_pair(c.piece_a, c.param_a) : std::make_pair(c.piece_b, c.param_b);
    };
    std::sort(arr.along_edge[e].begin(), arr.along_edge[e].end(), [&](int a, int b) { return key(a) < key(b); });
  }
  return arr;
}

namespace {

int position_on(const Arrangement& arr, int edge, int x) {
  const auto& list = arr.along_edge[edge];
  return static_cast<int>(std::find(list.begin(), list.end(), x) - list.begin());
}

std::string unique_crossing_id(const GeomDrawing& g, int x) {
  std::set<std::string> taken(g.vertex_ids.begin(), g.vertex_ids.end());
  for (const auto& e : g.edges) taken.insert(e.id);
  std::string id = "x" + std::to_string(x);
  while (taken.count(id)) id = "_" + id;
  return id;
}

Point piece_direction(const GeomDrawing& g, int edge, int piece) {
  const auto line = g.polyline(edge);
  return sub(line[piece + 1], line[piece]);
}

}  // namespace

std::vector<Point> segment_path(const GeomDrawing& g, const Arrangement& arr, int edge, int segment) {
  const auto line = g.polyline(edge);
  const auto& list = arr.along_edge[edge];
  const int last_piece = static_cast<int>(line.size()) - 2;
  auto node = [&](int pos, Point& at, int& piece) {
    if (pos < 0 || pos >= static_cast<int>(list.size())) {
      const bool source = pos < 0;
      at = source ? line.front() : line.back();
      piece = source ? 0 : last_piece;
      return;
    }
    const CrossingEvent& c = arr.crossings[list[pos]];
    at = c.at;
    piece = c.edge_a == edge ? c.piece_a : c.piece_b;
  };
  Point from, to;
  int from_piece = 0, to_piece = 0;
  node(segment - 1, from, from_piece);
  node(segment, to, to_piece);
  std::vector<Point> path{from};
  for (int i = from_piece + 1; i <= to_piece; ++i) path.push_back(line[i]);
  path.push_back(to);
  return path;
}

namespace {

// Polygon traced by a cell's boundary walk, with a flag marking bend corners.
std::vector<std::pair<Point, bool>> cell_polygon(const GeomDrawing& g, const Arrangement& arr, const Drawing& d,
                                                 int cell) {
  const Planarization& p = d.planarization;
  std::vector<std::pair<Point, bool>> out;
  for (int dart : d.cells[cell].darts) {
    const Segment& s = p.segments[Planarization::segment_of(dart)];
    auto path = segment_path(g, arr, s.edge, s.index);
    if (!Planarization::is_forward(dart)) std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back({path[i], i > 0});
  }
  return out;
}

}  // namespace

Rational cell_double_area(const GeomDrawing& g, const Arrangement& arr, const Drawing& d, int cell) {
  const auto poly = cell_polygon(g, arr, d, cell);
  Rational sum = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) sum += cross(poly[i].first, poly[(i + 1) % poly.size()].first);
  return sum;
}

Drawing to_combinatorial(const GeomDrawing& g, Surface surface) {
  const Arrangement arr = compute_arrangement(g);
  DrawingSpec spec;
  spec.surface = Surface::sphere;
  for (const auto& id : g.vertex_ids) spec.vertices.push_back({id, 0});
  std::vector<std::string> crossing_ids;
  for (int x = 0; x < static_cast<int>(arr.crossings.size()); ++x) crossing_ids.push_back(unique_crossing_id(g, x));
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const GeomEdge& ge = g.edges[e];
    DrawingSpec::EdgeLine line{ge.id, g.vertex_ids[ge.source], g.vertex_ids[ge.target], {}, 0};
    for (int x : arr.along_edge[e]) line.crossings.push_back(crossing_ids[x]);
    spec.edges.push_back(std::move(line));
  }
  for (int x = 0; x < static_cast<int>(arr.crossings.size()); ++x) {
    const CrossingEvent& c = arr.crossings[x];
    spec.crossings.push_back({crossing_ids[x], g.edges[c.edge_a].id, g.edges[c.edge_b].id, 0});
  }

  for (int v = 0; v < static_cast<int>(g.points.size()); ++v) {
    std::vector<std::pair<Point, DrawingSpec::EndRef>> ends;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      const auto line = g.polyline(e);
      if (g.edges[e].source == v) ends.push_back({sub(line[1], line[0]), {g.edges[e].id, false}});
      if (g.edges[e].target == v) {
        ends.push_back({sub(line[line.size() - 2], line.back()), {g.edges[e].id, true}});
      }
    }
    if (ends.empty()) continue;
    std::stable_sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    DrawingSpec::VertexRotation rot{g.vertex_ids[v], {}, 0};
    for (auto& [dir, end] : ends) rot.ends.push_back(end);
    spec.vertex_rotations.push_back(std::move(rot));
  }

  for (int x = 0; x < static_cast<int>(arr.crossings.size()); ++x) {
    const CrossingEvent& c = arr.crossings[x];
    const Point da = piece_direction(g, c.edge_a, c.piece_a);
    const Point db = piece_direction(g, c.edge_b, c.piece_b);
    const int pa = position_on(arr, c.edge_a, x), pb = position_on(arr, c.edge_b, x);
    const std::string& ea = g.edges[c.edge_a].id;
    const std::string& eb = g.edges[c.edge_b].id;
    std::vector<std::pair<Point, DrawingSpec::SegRef>> ends{
        {da, {ea, pa + 1}}, {neg(da), {ea, pa}}, {db, {eb, pb + 1}}, {neg(db), {eb, pb}}};
    std::sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    DrawingSpec::CrossingRotation rot{crossing_ids[x], {}, 0};
    for (auto& [dir, end] : ends) rot.ends.push_back(end);
    spec.crossing_rotations.push_back(std::move(rot));
  }

  Drawing sphere = build_drawing(spec);
  if (surface == Surface::sphere) return sphere;
  if (g.edges.empty()) throw Error(ErrorKind::PreconditionFailed, "a plane drawing needs at least one edge");

  int outer = 0;
  for (int c = 0; c < static_cast<int>(sphere.cells.size()); ++c) {
    if (cell_double_area(g, arr, sphere, c) < 0) {
      outer = c;
      break;
    }
  }
  const int dart = sphere.cells[outer].darts.front();
  const Segment& s = sphere.planarization.segments[Planarization::segment_of(dart)];
  spec.surface = Surface::plane;
  spec.outer_dart = DrawingSpec::OuterLine{g.edges[s.edge].id, s.index, Planarization::is_forward(dart), 0};
  return build_drawing(spec);
}

RacReport is_rac(const GeomDrawing& g, int k) {
  const Arrangement arr = compute_arrangement(g);
  RacReport r;
  r.rac = true;
  for (const GeomEdge& e : g.edges) {
    r.bends.push_back(static_cast<int>(e.bends.size()));
    if (static_cast<int>(e.bends.size()) > k) r.rac = false;
  }
  for (const CrossingEvent& c : arr.crossings) {
    const bool right = dot(piece_direction(g, c.edge_a, c.piece_a), piece_direction(g, c.edge_b, c.piece_b)) == 0;
    r.right_angle.push_back(right);
    if (!right) r.rac = false;
  }
  return r;
}

RacCertificate rac_certificate(const GeomDrawing& g) {
  const Arrangement arr = compute_arrangement(g);
  const RacReport r = is_rac(g, static_cast<int>(1e9));
  RacCertificate cert;
  cert.right_angles = r.rac;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    cert.max_bends = std::max(cert.max_bends, r.bends[e]);
    if (!arr.along_edge[e].empty()) {
      cert.max_bends_on_crossed_edges = std::max(cert.max_bends_on_crossed_edges, r.bends[e]);
    }
  }
  return cert;
}

int convex_bend_corners(const GeomDrawing& g, const Drawing& d, int cell) {
  if (cell < 0 || cell >= static_cast<int>(d.cells.size())) throw Error(ErrorKind::UnknownReference, "no such cell");
  if (d.cells[cell].unbounded) throw Error(ErrorKind::UnboundedCell, "cell " + std::to_string(cell) + " is unbounded");
  const Arrangement arr = compute_arrangement(g);
  const auto poly = cell_polygon(g, arr, d, cell);
  const std::size_t n = poly.size();
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!poly[i].second) continue;
    const Point& prev = poly[(i + n - 1) % n].first;
    const Point& here = poly[i].first;
    const Point& next = poly[(i + 1) % n].first;
    if (cross(sub(here, prev), sub(next, here)) > 0) ++count;
  }
  return count;
}

}  // namespace drawkit
