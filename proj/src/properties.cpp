#include "drawkit/properties.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace drawkit {

namespace {

// Crossings between each pair of distinct edges, keyed by the smaller edge.
std::vector<std::map<int, std::vector<int>>> crossings_by_pair(const Drawing& d) {
  std::vector<std::map<int, std::vector<int>>> out(d.edge_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Crossing& c = d.crossings[x];
    const int lo = std::min(c.edge_a, c.edge_b), hi = std::max(c.edge_a, c.edge_b);
    out[lo][hi].push_back(x);
  }
  return out;
}

int shared_endpoints(const Edge& a, const Edge& b) {
  int n = 0;
  if (a.source == b.source || a.source == b.target) ++n;
  if (a.target == b.source || a.target == b.target) ++n;
  return n;
}

// Edge pairs (e < f) sharing an endpoint or a crossing.
std::vector<std::pair<int, int>> touching_pairs(const Drawing& d,
                                                const std::vector<std::map<int, std::vector<int>>>& by_pair) {
  std::set<std::pair<int, int>> pairs;
  for (int e = 0; e < d.edge_count(); ++e) {
    for (const auto& [f, xs] : by_pair[e]) pairs.insert({e, f});
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto& rot = d.vertex_rotations[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      for (std::size_t j = i + 1; j < rot.size(); ++j) {
        const int a = rot[i].edge, b = rot[j].edge;
        pairs.insert({std::min(a, b), std::max(a, b)});
      }
    }
  }
  return {pairs.begin(), pairs.end()};
}

}  // namespace

std::optional<SimpleViolation> find_simple_violation(const Drawing& d) {
  const auto by_pair = crossings_by_pair(d);
  for (auto [e, f] : touching_pairs(d, by_pair)) {
    const int shared = shared_endpoints(d.edges[e], d.edges[f]);
    auto it = by_pair[e].find(f);
    const int crossings = it == by_pair[e].end() ? 0 : static_cast<int>(it->second.size());
    if (shared + crossings < 2) continue;
    std::string reason = shared == 2 ? "parallel" : shared == 1 ? "adjacent crossing" : "double crossing";
    return SimpleViolation{e, f, reason};
  }
  return std::nullopt;
}

bool is_simple(const Drawing& d) { return !find_simple_violation(d).has_value(); }

namespace {

struct PointOnPair {
  CommonPoint point;
  int pos_e;  // 0 = source, i+1 = crossing i, m+1 = target
  int pos_f;
};

int vertex_pos(const Edge& e, int v) { return e.source == v ? 0 : static_cast<int>(e.crossings.size()) + 1; }

void append_arc(const Planarization& p, int edge, int from_pos, int to_pos, std::vector<int>& darts) {
  if (from_pos < to_pos) {
    for (int s = from_pos; s < to_pos; ++s) darts.push_back(p.dart(edge, s, true));
  } else {
    for (int s = from_pos - 1; s >= to_pos; --s) darts.push_back(p.dart(edge, s, false));
  }
}

// Nodes strictly inside the region grown from `seeds` without crossing the curve.
std::vector<int> region_nodes(const Drawing& d, const std::vector<int>& seeds, const std::vector<bool>& on_curve_segment,
                              const std::vector<bool>& on_curve_node, bool& contains_unbounded) {
  const Planarization& p = d.planarization;
  std::vector<bool> in_region(d.cells.size(), false);
  std::queue<int> queue;
  for (int c : seeds) {
    if (!in_region[c]) {
      in_region[c] = true;
      queue.push(c);
    }
  }
  std::set<int> nodes;
  contains_unbounded = false;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop();
    if (d.cells[c].unbounded) contains_unbounded = true;
    for (int dart : d.cells[c].darts) {
      const int node = p.origin(dart);
      if (!on_curve_node[node]) nodes.insert(node);
      if (on_curve_segment[Planarization::segment_of(dart)]) continue;
      const int next = d.cell_of_dart[Planarization::twin(dart)];
      if (!in_region[next]) {
        in_region[next] = true;
        queue.push(next);
      }
    }
  }
  return {nodes.begin(), nodes.end()};
}

CommonPoint node_point(const Planarization& p, int node) {
  return p.is_vertex(node) ? CommonPoint{true, node} : CommonPoint{false, node - p.vertex_count};
}

}  // namespace

std::vector<Lens> find_lenses(const Drawing& d) {
  const Planarization& p = d.planarization;
  const auto by_pair = crossings_by_pair(d);
  std::vector<Lens> lenses;
  std::vector<bool> on_curve_segment(p.segments.size(), false);
  std::vector<bool> on_curve_node(p.node_count, false);

  for (auto [e, f] : touching_pairs(d, by_pair)) {
    const Edge& ee = d.edges[e];
    const Edge& fe = d.edges[f];
    std::vector<PointOnPair> points;
    for (int v : {ee.source, ee.target}) {
      if (v == fe.source || v == fe.target) points.push_back({{true, v}, vertex_pos(ee, v), vertex_pos(fe, v)});
    }
    auto it = by_pair[e].find(f);
    if (it != by_pair[e].end()) {
      for (int x : it->second) points.push_back({{false, x}, d.position_in(x, e) + 1, d.position_in(x, f) + 1});
    }
    if (points.size() < 2) continue;

    std::vector<int> order_f(points.size());
    {
      std::vector<int> idx(points.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return points[a].pos_f < points[b].pos_f; });
      for (std::size_t r = 0; r < idx.size(); ++r) order_f[idx[r]] = static_cast<int>(r);
    }
    std::vector<int> by_e(points.size());
    for (std::size_t i = 0; i < by_e.size(); ++i) by_e[i] = static_cast<int>(i);
    std::sort(by_e.begin(), by_e.end(), [&](int a, int b) { return points[a].pos_e < points[b].pos_e; });

    for (std::size_t k = 0; k + 1 < by_e.size(); ++k) {
      const PointOnPair& a = points[by_e[k]];
      const PointOnPair& b = points[by_e[k + 1]];
      if (std::abs(order_f[by_e[k]] - order_f[by_e[k + 1]]) != 1) continue;

      std::vector<int> curve;
      append_arc(p, e, a.pos_e, b.pos_e, curve);
      const std::size_t e_darts = curve.size();
      append_arc(p, f, b.pos_f, a.pos_f, curve);

      for (int dart : curve) {
        on_curve_segment[Planarization::segment_of(dart)] = true;
        on_curve_node[p.origin(dart)] = true;
      }
      std::vector<int> left_seeds, right_seeds;
      for (int dart : curve) {
        left_seeds.push_back(d.cell_of_dart[dart]);
        right_seeds.push_back(d.cell_of_dart[Planarization::twin(dart)]);
      }
      bool left_unbounded = false, right_unbounded = false;
      auto left = region_nodes(d, left_seeds, on_curve_segment, on_curve_node, left_unbounded);
      auto right = region_nodes(d, right_seeds, on_curve_segment, on_curve_node, right_unbounded);
      for (int dart : curve) {
        on_curve_segment[Planarization::segment_of(dart)] = false;
        on_curve_node[p.origin(dart)] = false;
      }

      Lens lens;
      lens.edge_e = e;
      lens.edge_f = f;
      lens.p = a.point;
      lens.q = b.point;
      lens.e_first_segment = a.pos_e;
      lens.e_last_segment = b.pos_e;
      lens.f_first_segment = std::min(a.pos_f, b.pos_f);
      lens.f_last_segment = std::max(a.pos_f, b.pos_f);
      (void)e_darts;
      for (int node : left) lens.left_interior.push_back(node_point(p, node));
      for (int node : right) lens.right_interior.push_back(node_point(p, node));

      if (d.surface == Surface::plane) {
        const auto& inner = left_unbounded ? lens.right_interior : lens.left_interior;
        lens.empty = inner.empty();
        if (!inner.empty()) lens.witness = inner.front();
      } else {
        lens.empty = lens.left_interior.empty() || lens.right_interior.empty();
        if (!lens.empty) lens.witness = lens.left_interior.front();
      }
      lenses.push_back(std::move(lens));
    }
  }
  return lenses;
}

std::vector<Lens> find_empty_lenses(const Drawing& d) {
  std::vector<Lens> out;
  for (auto& lens : find_lenses(d)) {
    if (lens.empty) out.push_back(std::move(lens));
  }
  return out;
}

bool is_non_homotopic(const Drawing& d) { return find_empty_lenses(d).empty(); }

std::optional<FilledWitness> find_unfilled_pair(const Drawing& d) {
  const Planarization& p = d.planarization;
  for (const Cell& cell : d.cells) {
    if (cell.distinct_vertices.size() < 2) continue;
    std::set<std::pair<int, int>> joined;
    for (int dart : cell.darts) {
      const Edge& e = d.edges[p.segments[Planarization::segment_of(dart)].edge];
      if (!e.crossings.empty()) continue;
      joined.insert({std::min(e.source, e.target), std::max(e.source, e.target)});
    }
    const auto& vs = cell.distinct_vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (!joined.count({vs[i], vs[j]})) return FilledWitness{cell.id, vs[i], vs[j]};
      }
    }
  }
  return std::nullopt;
}

bool is_filled(const Drawing& d) { return !find_unfilled_pair(d).has_value(); }

int max_distinct_vertices_per_cell(const Drawing& d) {
  std::size_t best = 0;
  for (const Cell& c : d.cells) best = std::max(best, c.distinct_vertices.size());
  return static_cast<int>(best);
}

Bipartition bipartition(const Drawing& d) {
  const int n = d.vertex_count();
  Bipartition out;
  out.color.assign(n, -1);
  std::vector<int> parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (out.color[root] >= 0) continue;
    out.color[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const EdgeEnd& end : d.vertex_rotations[u]) {
        const int w = d.other_endpoint(end.edge, u);
        if (out.color[w] < 0) {
          out.color[w] = 1 - out.color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push(w);
        } else if (out.color[w] == out.color[u]) {
          // Tree paths from u and w meet; together with uw they close an odd walk.
          std::vector<int> from_u{u}, from_w{w};
          int a = u, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              from_u.push_back(a);
            } else {
              b = parent[b];
              from_w.push_back(b);
            }
          }
          from_w.pop_back();
          out.odd_walk = from_u;
          out.odd_walk.insert(out.odd_walk.end(), from_w.rbegin(), from_w.rend());
          out.bipartite = false;
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

}  // namespace drawkit
