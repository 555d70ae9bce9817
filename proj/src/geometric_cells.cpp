#include <algorithm>
#include <map>

#include "drawkit/geometry.hpp"
#include "geometry_internal.hpp"

namespace drawkit {

using namespace geom;

namespace {

enum class NodeKind { vertex, crossing, bend };

struct HalfEdge {
  int origin = -1;
  int head = -1;
};

}  // namespace

std::vector<std::pair<int, int>> geometric_cells(const GeomDrawing& g) {
  const Arrangement arr = compute_arrangement(g);

  std::vector<Point> node_point;
  std::vector<NodeKind> node_kind;
  std::map<std::pair<Rational, Rational>, int> node_at;
  auto node = [&](const Point& p, NodeKind kind) {
    auto [it, fresh] = node_at.emplace(std::make_pair(p.x, p.y), static_cast<int>(node_point.size()));
    if (fresh) {
      node_point.push_back(p);
      node_kind.push_back(kind);
    }
    return it->second;
  };
  for (const Point& p : g.points) node(p, NodeKind::vertex);

  // Split every polyline piece at its crossings.
  std::vector<HalfEdge> halves;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto line = g.polyline(e);
    std::vector<std::vector<std::pair<Rational, Point>>> cuts(line.size() - 1);
    for (const CrossingEvent& c : arr.crossings) {
      if (c.edge_a == e) cuts[c.piece_a].push_back({c.param_a, c.at});
      if (c.edge_b == e) cuts[c.piece_b].push_back({c.param_b, c.at});
    }
    int prev = node(line.front(), NodeKind::vertex);
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      auto& list = cuts[i];
      std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [t, at] : list) {
        const int here = node(at, NodeKind::crossing);
        halves.push_back({prev, here});
        halves.push_back({here, prev});
        prev = here;
      }
      const bool last = i + 2 == line.size();
      const int here = node(line[i + 1], last ? NodeKind::vertex : NodeKind::bend);
      halves.push_back({prev, here});
      halves.push_back({here, prev});
      prev = here;
    }
  }

  if (halves.empty()) return std::vector<std::pair<int, int>>(g.points.size(), {1, 0});

  std::vector<std::vector<int>> around(node_point.size());
  for (int h = 0; h < static_cast<int>(halves.size()); ++h) around[halves[h].origin].push_back(h);
  std::vector<int> slot(halves.size());
  for (auto& list : around) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return angle_less(sub(node_point[halves[a].head], node_point[halves[a].origin]),
                        sub(node_point[halves[b].head], node_point[halves[b].origin]));
    });
    for (int i = 0; i < static_cast<int>(list.size()); ++i) slot[list[i]] = i;
  }

  // Next half-edge keeping the face on the left: clockwise neighbour of the twin.
  auto next = [&](int h) {
    const int twin = h ^ 1;
    const auto& list = around[halves[twin].origin];
    const int i = slot[twin];
    return list[(i + static_cast<int>(list.size()) - 1) % list.size()];
  };

  std::vector<bool> used(halves.size(), false);
  std::vector<std::pair<int, int>> faces;
  for (int start = 0; start < static_cast<int>(halves.size()); ++start) {
    if (used[start]) continue;
    int vertex_incidences = 0, segment_incidences = 0;
    int h = start;
    do {
      used[h] = true;
      const NodeKind kind = node_kind[halves[h].origin];
      if (kind == NodeKind::vertex) ++vertex_incidences;
      if (kind != NodeKind::bend) ++segment_incidences;
      h = next(h);
    } while (h != start);
    faces.push_back({vertex_incidences, segment_incidences});
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace drawkit
