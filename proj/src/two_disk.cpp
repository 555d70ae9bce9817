#include "two_disk.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "drawkit/errors.hpp"
#include "drawkit/geometry.hpp"
#include "geometry_internal.hpp"

namespace drawkit::detail {

namespace {

using geom::cross;
using geom::neg;
using geom::sub;

Rational wrap(Rational p, int length) {
  while (p < 0) p += length;
  while (p >= length) p -= length;
  return p;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::string cycle_vertex(int i) { return "v" + std::to_string(i); }
std::string cycle_edge(int i) { return "c" + std::to_string(i); }

// One disk realized as a plane straight-line drawing.
struct Disk {
  GeomDrawing geometry;
  Arrangement arrangement;
  std::map<std::pair<int, int>, int> edge_of_chord;  // (route, chord) -> disk edge
};

struct Layout {
  std::map<Rational, int> boundary;  // cycle position -> disk vertex
  std::vector<Disk> disks;           // inside, outside
};

void fail(const std::string& message) { throw Error(ErrorKind::GenerationFailed, message); }

// Returns false when the jittered positions produce a degenerate arrangement.
bool lay_out(const TwoDiskModel& m, const std::vector<Rational>& positions, std::mt19937_64* rng, Layout& out) {
  out.boundary.clear();
  std::map<Rational, Rational> jittered;
  for (const Rational& p : positions) {
    Rational x = p;
    if (rng) x += Rational(static_cast<long long>((*rng)() % 1001) - 500, 8000);
    jittered[p] = x;
  }
  out.disks.assign(2, {});
  for (int side = 0; side < 2; ++side) {
    Disk& disk = out.disks[side];
    GeomDrawing& g = disk.geometry;
    const int sign = side == 0 ? 1 : -1;
    for (const Rational& p : positions) {
      const Rational& x = jittered[p];
      out.boundary[p] = static_cast<int>(g.points.size());
      g.vertex_ids.push_back("b" + std::to_string(g.points.size()));
      g.points.push_back({sign * x, x * x});
    }
    std::vector<int> hub_vertex(m.hubs.size(), -1);
    for (std::size_t h = 0; h < m.hubs.size(); ++h) {
      if (m.hubs[h].inside != (side == 0)) continue;
      Point c{0, 0};
      for (const Rational& p : m.hubs[h].placed_among) {
        const Point& q = g.points[out.boundary.at(wrap(p, m.cycle_length))];
        c.x += q.x;
        c.y += q.y;
      }
      const auto count = static_cast<long long>(m.hubs[h].placed_among.size());
      if (rng) {
        c.x += Rational(static_cast<long long>((*rng)() % 1001) - 500, 4000);
        c.y += Rational(static_cast<long long>((*rng)() % 1001) - 500, 4000);
      }
      hub_vertex[h] = static_cast<int>(g.points.size());
      g.vertex_ids.push_back("h" + std::to_string(h));
      g.points.push_back({c.x / count, c.y / count});
    }
    auto vertex_of = [&](const Anchor& a) {
      if (a.hub >= 0) {
        if (hub_vertex[a.hub] < 0) fail("hub " + m.hubs[a.hub].id + " used from the wrong disk");
        return hub_vertex[a.hub];
      }
      return out.boundary.at(wrap(a.position, m.cycle_length));
    };
    for (std::size_t r = 0; r < m.routes.size(); ++r) {
      const auto& route = m.routes[r];
      for (std::size_t j = 0; j < route.inside.size(); ++j) {
        if (route.inside[j] != (side == 0)) continue;
        disk.edge_of_chord[{static_cast<int>(r), static_cast<int>(j)}] = static_cast<int>(g.edges.size());
        g.edges.push_back({route.id + "." + std::to_string(j), vertex_of(route.stops[j]), vertex_of(route.stops[j + 1]), {}});
      }
    }
    try {
      disk.arrangement = compute_arrangement(g);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateContact) return false;
      throw;
    }
  }
  return true;
}

}  // namespace

Drawing realize(const TwoDiskModel& m, std::uint64_t seed) {
  const int length = m.cycle_length;
  if (length < 3) fail("the cycle needs at least three vertices");

  std::vector<Rational> positions;
  for (int i = 0; i < length; ++i) positions.push_back(i);
  std::map<Rational, int> route_crossing_cycle;  // fractional position -> route
  for (std::size_t r = 0; r < m.routes.size(); ++r) {
    const auto& route = m.routes[r];
    if (route.stops.size() != route.inside.size() + 1 || route.inside.empty()) fail("malformed route " + route.id);
    for (std::size_t j = 0; j < route.stops.size(); ++j) {
      const Anchor& a = route.stops[j];
      const bool end = j == 0 || j + 1 == route.stops.size();
      if (a.hub >= 0) {
        if (!end) fail("route " + route.id + " passes through a hub");
        continue;
      }
      const Rational p = wrap(a.position, length);
      if (end != is_integer(p)) fail("route " + route.id + " has a misplaced stop");
      if (end) continue;
      if (route.inside[j - 1] == route.inside[j]) fail("route " + route.id + " does not switch disk at the cycle");
      if (!route_crossing_cycle.emplace(p, static_cast<int>(r)).second) fail("two routes cross the cycle at one point");
      positions.push_back(p);
    }
  }
  std::sort(positions.begin(), positions.end());

  Layout layout;
  std::mt19937_64 rng(seed);
  bool ok = lay_out(m, positions, nullptr, layout);
  for (int attempt = 0; !ok && attempt < 200; ++attempt) ok = lay_out(m, positions, &rng, layout);
  if (!ok) fail("no non-degenerate placement found");

  DrawingSpec spec;
  spec.surface = Surface::sphere;
  for (int i = 0; i < length; ++i) spec.vertices.push_back({cycle_vertex(i), 0});
  for (const auto& h : m.hubs) spec.vertices.push_back({h.id, 0});

  // Crossing ids: disk crossings keyed by (side, arrangement index), cycle
  // crossings by position.
  std::map<std::pair<int, int>, std::string> disk_crossing_id;
  std::map<Rational, std::string> cycle_crossing_id;
  int next_id = 0;
  auto fresh = [&] { return "x" + std::to_string(next_id++); };
  for (const auto& [p, r] : route_crossing_cycle) cycle_crossing_id[p] = fresh();
  for (int side = 0; side < 2; ++side) {
    const auto& arr = layout.disks[side].arrangement;
    for (int x = 0; x < static_cast<int>(arr.crossings.size()); ++x) disk_crossing_id[{side, x}] = fresh();
  }

  std::map<std::string, std::map<std::string, int>> position_in;  // crossing -> edge -> index
  auto add_edge = [&](const std::string& id, const std::string& u, const std::string& v,
                      const std::vector<std::string>& crossings) {
    for (int k = 0; k < static_cast<int>(crossings.size()); ++k) position_in[crossings[k]][id] = k;
    spec.edges.push_back({id, u, v, crossings, 0});
  };
  auto end_name = [&](const Anchor& a) {
    return a.hub >= 0 ? m.hubs[a.hub].id : cycle_vertex(static_cast<int>(wrap(a.position, length)));
  };

  for (int i = 0; i < length; ++i) {
    std::vector<std::string> xs;
    for (const auto& [p, id] : cycle_crossing_id) {
      if (p > i && p < i + 1) xs.push_back(id);
    }
    add_edge(cycle_edge(i), cycle_vertex(i), cycle_vertex((i + 1) % length), xs);
  }
  for (std::size_t r = 0; r < m.routes.size(); ++r) {
    const auto& route = m.routes[r];
    std::vector<std::string> xs;
    for (std::size_t j = 0; j < route.inside.size(); ++j) {
      const int side = route.inside[j] ? 0 : 1;
      const Disk& disk = layout.disks[side];
      const int de = disk.edge_of_chord.at({static_cast<int>(r), static_cast<int>(j)});
      for (int x : disk.arrangement.along_edge[de]) xs.push_back(disk_crossing_id.at({side, x}));
      if (j + 1 < route.inside.size()) xs.push_back(cycle_crossing_id.at(wrap(route.stops[j + 1].position, length)));
    }
    add_edge(route.id, end_name(route.stops.front()), end_name(route.stops.back()), xs);
  }

  // Disk crossings.
  for (int side = 0; side < 2; ++side) {
    const Disk& disk = layout.disks[side];
    std::vector<std::string> route_of_disk_edge(disk.geometry.edges.size());
    for (const auto& [key, de] : disk.edge_of_chord) route_of_disk_edge[de] = m.routes[key.first].id;
    const auto& arr = disk.arrangement;
    for (int x = 0; x < static_cast<int>(arr.crossings.size()); ++x) {
      const CrossingEvent& c = arr.crossings[x];
      const std::string& id = disk_crossing_id.at({side, x});
      const std::string& ea = route_of_disk_edge[c.edge_a];
      const std::string& eb = route_of_disk_edge[c.edge_b];
      if (ea == eb) fail("route " + ea + " crosses itself");
      auto direction = [&](int de) {
        const GeomEdge& e = disk.geometry.edges[de];
        return sub(disk.geometry.points[e.target], disk.geometry.points[e.source]);
      };
      const Point da = direction(c.edge_a), db = direction(c.edge_b);
      const int pa = position_in[id][ea], pb = position_in[id][eb];
      std::vector<std::pair<Point, DrawingSpec::SegRef>> ends{
          {da, {ea, pa + 1}}, {neg(da), {ea, pa}}, {db, {eb, pb + 1}}, {neg(db), {eb, pb}}};
      std::sort(ends.begin(), ends.end(),
                [](const auto& a, const auto& b) { return geom::angle_less(a.first, b.first); });
      DrawingSpec::CrossingRotation rot{id, {}, 0};
      for (auto& [dir, end] : ends) rot.ends.push_back(end);
      spec.crossings.push_back({id, ea, eb, 0});
      spec.crossing_rotations.push_back(std::move(rot));
    }
  }

  // Cycle crossings: forward along the cycle, inside, backward, outside.
  for (const auto& [p, r] : route_crossing_cycle) {
    const auto& route = m.routes[r];
    const std::string& id = cycle_crossing_id.at(p);
    const std::string ce = cycle_edge(static_cast<int>(numerator(p) / denominator(p)));
    std::size_t j = 1;
    while (wrap(route.stops[j].position, length) != p) ++j;
    const int kc = position_in[id][ce], kr = position_in[id][route.id];
    const bool before_inside = route.inside[j - 1];
    DrawingSpec::SegRef in{route.id, before_inside ? kr : kr + 1};
    DrawingSpec::SegRef out{route.id, before_inside ? kr + 1 : kr};
    spec.crossings.push_back({id, ce, route.id, 0});
    spec.crossing_rotations.push_back({id, {{ce, kc + 1}, in, {ce, kc}, out}, 0});
  }

  // Ends of chords at a vertex, with the chord direction in its disk.
  struct End {
    Point direction;
    DrawingSpec::EndRef ref;
  };
  std::vector<std::vector<End>> at_cycle(2 * length);  // 2i inside, 2i+1 outside
  std::vector<std::vector<End>> at_hub(m.hubs.size());
  for (std::size_t r = 0; r < m.routes.size(); ++r) {
    const auto& route = m.routes[r];
    const std::size_t last = route.inside.size() - 1;
    for (const bool at_target : {false, true}) {
      const std::size_t j = at_target ? last : 0;
      const int side = route.inside[j] ? 0 : 1;
      const Disk& disk = layout.disks[side];
      const GeomEdge& e = disk.geometry.edges[disk.edge_of_chord.at({static_cast<int>(r), static_cast<int>(j)})];
      Point d = sub(disk.geometry.points[e.target], disk.geometry.points[e.source]);
      if (at_target) d = neg(d);
      const Anchor& a = at_target ? route.stops.back() : route.stops.front();
      End end{d, {route.id, at_target}};
      if (a.hub >= 0) {
        at_hub[a.hub].push_back(end);
      } else {
        at_cycle[2 * static_cast<int>(wrap(a.position, length)) + side].push_back(end);
      }
    }
  }
  auto within_wedge = [](std::vector<End>& ends) {
    std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) { return cross(a.direction, b.direction) > 0; });
  };
  for (int i = 0; i < length; ++i) {
    DrawingSpec::VertexRotation rot{cycle_vertex(i), {{cycle_edge(i), false}}, 0};
    within_wedge(at_cycle[2 * i]);
    within_wedge(at_cycle[2 * i + 1]);
    for (const End& e : at_cycle[2 * i]) rot.ends.push_back(e.ref);
    rot.ends.push_back({cycle_edge((i + length - 1) % length), true});
    for (const End& e : at_cycle[2 * i + 1]) rot.ends.push_back(e.ref);
    spec.vertex_rotations.push_back(std::move(rot));
  }
  for (std::size_t h = 0; h < m.hubs.size(); ++h) {
    auto& ends = at_hub[h];
    std::sort(ends.begin(), ends.end(),
              [](const End& a, const End& b) { return geom::angle_less(a.direction, b.direction); });
    DrawingSpec::VertexRotation rot{m.hubs[h].id, {}, 0};
    for (const End& e : ends) rot.ends.push_back(e.ref);
    if (!rot.ends.empty()) spec.vertex_rotations.push_back(std::move(rot));
  }

  return build_drawing(spec);
}

}  // namespace drawkit::detail
