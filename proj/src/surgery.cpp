#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "drawkit/classes.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/generators.hpp"
#include "drawkit/properties.hpp"

namespace drawkit {

namespace {

// A drawing keyed by ids, so that edges and crossings can be inserted or
// removed without renumbering segments by hand. A crossing rotation entry
// names an edge and the side of the crossing it leads to.
struct Editable {
  struct EdgeRec {
    std::string id;
    int source = -1;
    int target = -1;
    std::vector<std::string> crossings;
  };
  struct Side {
    std::string edge;
    bool toward_target = false;
    bool operator==(const Side&) const = default;
  };
  struct End {
    std::string edge;
    bool at_target = false;
    bool operator==(const End&) const = default;
  };
  // Outer dart: `tail` is the crossing at the source-side end of the segment,
  // or empty for the first segment.
  struct Outer {
    std::string edge;
    std::string tail;
    bool forward = true;
  };

  Surface surface = Surface::sphere;
  std::vector<std::string> vertex_ids;
  std::vector<EdgeRec> edges;
  std::map<std::string, std::vector<Side>> crossing_rotation;  // counterclockwise
  std::vector<std::vector<End>> vertex_rotation;
  std::optional<Outer> outer;
  int next_id = 0;

  EdgeRec& edge(const std::string& id) {
    return *std::find_if(edges.begin(), edges.end(), [&](const EdgeRec& e) { return e.id == id; });
  }

  std::string fresh(const std::string& prefix) {
    for (;;) {
      std::string id = prefix + std::to_string(next_id++);
      const bool used = std::any_of(edges.begin(), edges.end(), [&](const EdgeRec& e) { return e.id == id; }) ||
                        crossing_rotation.count(id) ||
                        std::find(vertex_ids.begin(), vertex_ids.end(), id) != vertex_ids.end();
      if (!used) return id;
    }
  }
};

Editable editable(const Drawing& d) {
  Editable ed;
  ed.surface = d.surface;
  ed.vertex_ids = d.vertex_ids;
  for (const Edge& e : d.edges) {
    Editable::EdgeRec rec{e.id, e.source, e.target, {}};
    for (int x : e.crossings) rec.crossings.push_back(d.crossings[x].id);
    ed.edges.push_back(std::move(rec));
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    auto& rot = ed.crossing_rotation[d.crossings[x].id];
    for (const SegmentEnd& se : d.crossing_rotations[x]) {
      rot.push_back({d.edges[se.edge].id, se.segment != d.position_in(x, se.edge)});
    }
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    ed.vertex_rotation.emplace_back();
    for (const EdgeEnd& end : d.vertex_rotations[v]) ed.vertex_rotation[v].push_back({d.edges[end.edge].id, end.at_target});
  }
  if (d.outer_dart) {
    const Edge& e = d.edges[d.outer_dart->edge];
    const int s = d.outer_dart->segment;
    ed.outer = Editable::Outer{e.id, s == 0 ? "" : d.crossings[e.crossings[s - 1]].id, d.outer_dart->forward};
  }
  return ed;
}

Drawing rebuild(const Editable& ed) {
  DrawingSpec spec;
  spec.surface = ed.surface;
  std::map<std::string, std::map<std::string, int>> position;  // crossing -> edge -> index
  std::map<std::string, std::vector<std::string>> crossing_edges;
  for (const auto& id : ed.vertex_ids) spec.vertices.push_back({id, 0});
  for (const auto& e : ed.edges) {
    spec.edges.push_back({e.id, ed.vertex_ids[e.source], ed.vertex_ids[e.target], e.crossings, 0});
    for (int k = 0; k < static_cast<int>(e.crossings.size()); ++k) {
      position[e.crossings[k]][e.id] = k;
      crossing_edges[e.crossings[k]].push_back(e.id);
    }
  }
  for (const auto& [x, rot] : ed.crossing_rotation) {
    const auto& pair = crossing_edges.at(x);
    spec.crossings.push_back({x, pair.at(0), pair.at(1), 0});
    DrawingSpec::CrossingRotation line{x, {}, 0};
    for (const auto& side : rot) line.ends.push_back({side.edge, position[x][side.edge] + (side.toward_target ? 1 : 0)});
    spec.crossing_rotations.push_back(std::move(line));
  }
  for (std::size_t v = 0; v < ed.vertex_ids.size(); ++v) {
    if (ed.vertex_rotation[v].empty()) continue;
    DrawingSpec::VertexRotation line{ed.vertex_ids[v], {}, 0};
    for (const auto& end : ed.vertex_rotation[v]) line.ends.push_back({end.edge, end.at_target});
    spec.vertex_rotations.push_back(std::move(line));
  }
  if (ed.outer) {
    const int s = ed.outer->tail.empty() ? 0 : position[ed.outer->tail][ed.outer->edge] + 1;
    spec.outer_dart = DrawingSpec::OuterLine{ed.outer->edge, s, ed.outer->forward, 0};
  }
  return build_drawing(spec);
}

// Puts `end` right after the rotation entry of `dart` at vertex `v`.
void insert_after(Editable& ed, const Drawing& d, int v, int dart, const Editable::End& end) {
  const int k = d.planarization.rotation_pos[dart];
  auto& rot = ed.vertex_rotation[v];
  rot.insert(rot.begin() + k + 1, end);
}

// Vertex occurrences on a cell's walk: the dart leaving each one.
std::vector<int> corner_darts(const Drawing& d, int cell) {
  std::vector<int> out;
  for (int dart : d.cells[cell].darts) {
    if (d.planarization.is_vertex(d.planarization.origin(dart))) out.push_back(dart);
  }
  return out;
}

// Draws an uncrossed edge u-v through `cell`, at the first corner of each.
void add_uncrossed(Editable& ed, const Drawing& d, int cell, int u, int v) {
  const Planarization& p = d.planarization;
  int du = -1, dv = -1;
  for (int dart : corner_darts(d, cell)) {
    if (p.origin(dart) == u && du < 0) du = dart;
    if (p.origin(dart) == v && dv < 0) dv = dart;
  }
  const std::string id = ed.fresh("f");
  ed.edges.push_back({id, u, v, {}});
  insert_after(ed, d, u, du, {id, false});
  insert_after(ed, d, v, dv, {id, true});
}

void remove_edge(Editable& ed, const Drawing& d, const std::string& id) {
  const int e = d.edge_index.at(id);
  if (ed.outer && ed.outer->edge == id) {
    // Any other dart of the outer cell still bounds the merged cell.
    const int outer_cell = d.cell_of_dart[d.planarization.dart(e, [&] {
      const auto& xs = d.edges[e].crossings;
      if (ed.outer->tail.empty()) return 0;
      for (int k = 0; k < static_cast<int>(xs.size()); ++k) {
        if (d.crossings[xs[k]].id == ed.outer->tail) return k + 1;
      }
      return 0;
    }(), ed.outer->forward)];
    for (int dart : d.cells[outer_cell].darts) {
      const Segment& s = d.planarization.segments[Planarization::segment_of(dart)];
      if (s.edge == e) continue;
      const auto& xs = d.edges[s.edge].crossings;
      // Skip segments whose tail crossing disappears with e.
      if (s.index > 0 && d.other_edge(xs[s.index - 1], s.edge) == e) continue;
      ed.outer = Editable::Outer{d.edges[s.edge].id, s.index == 0 ? "" : d.crossings[xs[s.index - 1]].id,
                                 Planarization::is_forward(dart)};
      break;
    }
  }
  const auto& rec = ed.edge(id);
  for (const std::string& x : rec.crossings) {
    ed.crossing_rotation.erase(x);
    for (auto& other : ed.edges) {
      if (other.id == id) continue;
      auto it = std::find(other.crossings.begin(), other.crossings.end(), x);
      if (it == other.crossings.end()) continue;
      const bool outer_tail = ed.outer && ed.outer->edge == other.id && ed.outer->tail == x;
      const std::string previous = it == other.crossings.begin() ? "" : *(it - 1);
      other.crossings.erase(it);
      if (outer_tail) ed.outer->tail = previous;
    }
  }
  for (auto& rot : ed.vertex_rotation) {
    rot.erase(std::remove_if(rot.begin(), rot.end(), [&](const Editable::End& end) { return end.edge == id; }), rot.end());
  }
  ed.edges.erase(std::find_if(ed.edges.begin(), ed.edges.end(), [&](const auto& r) { return r.id == id; }));
}

bool three_connected(const Drawing& d) {
  const int n = d.vertex_count();
  if (n < 4) return false;
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : d.edges) {
    adj[e.source].insert(e.target);
    adj[e.target].insert(e.source);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      std::vector<bool> seen(n, false);
      seen[a] = seen[b] = true;
      int start = 0;
      while (seen[start]) ++start;
      std::vector<int> stack{start};
      seen[start] = true;
      int reached = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
          if (!seen[y]) {
            seen[y] = true;
            ++reached;
            stack.push_back(y);
          }
        }
      }
      if (reached != n - (a == b ? 1 : 2)) return false;
    }
  }
  return true;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::PreconditionFailed, what);
}

// Bound on insertions: every pair sharing a cell gets joined at most once per cell split.
int step_limit(const Drawing& d) {
  int total = 0;
  for (const Cell& c : d.cells) total += c.size * c.size;
  return total + 16;
}

}  // namespace

Drawing fill(const Drawing& d) {
  require(is_non_homotopic(d), "fill needs a non-homotopic drawing");
  require(is_quasiplanar(d), "fill needs a quasiplanar drawing");
  Drawing current = d;
  const int limit = step_limit(d);
  for (int step = 0; step < limit; ++step) {
    const auto gap = find_unfilled_pair(current);
    if (!gap) return current;
    Editable ed = editable(current);
    add_uncrossed(ed, current, gap->cell, gap->u, gap->v);
    current = rebuild(ed);
  }
  throw Error(ErrorKind::GenerationFailed, "fill did not terminate");
}

Drawing fill_simple(const Drawing& d) {
  require(is_simple(d), "fill_simple needs a simple drawing");
  require(is_quasiplanar(d), "fill_simple needs a quasiplanar drawing");
  require(three_connected(d), "fill_simple needs a 3-connected graph");
  Drawing current = d;
  const int limit = step_limit(d) + d.crossing_count();
  for (int step = 0; step < limit; ++step) {
    const auto gap = find_unfilled_pair(current);
    if (!gap) return current;
    Editable ed = editable(current);
    std::optional<std::string> parallel;
    for (const Edge& e : current.edges) {
      if ((e.source == gap->u && e.target == gap->v) || (e.source == gap->v && e.target == gap->u)) parallel = e.id;
    }
    if (parallel) {
      require(!current.edges[current.edge_index.at(*parallel)].crossings.empty(),
              "uncrossed edge " + *parallel + " separates the graph");
    }
    add_uncrossed(ed, current, gap->cell, gap->u, gap->v);
    if (parallel) remove_edge(ed, current, *parallel);
    current = rebuild(ed);
  }
  throw Error(ErrorKind::GenerationFailed, "fill_simple did not terminate");
}

Drawing eliminate_t_cells(const Drawing& d) {
  require(d.vertex_count() >= 4, "eliminate_t_cells needs at least four vertices");
  require(is_filled(d), "eliminate_t_cells needs a filled drawing");
  require(is_non_homotopic(d), "eliminate_t_cells needs a non-homotopic drawing");
  require(is_quasiplanar(d), "eliminate_t_cells needs a quasiplanar drawing");
  Drawing current = d;
  const int limit = 4 * static_cast<int>(d.cells.size()) + 16;
  for (int step = 0; step < limit; ++step) {
    const auto it = std::find_if(current.cells.begin(), current.cells.end(),
                                 [](const Cell& c) { return c.cls.kind == CellKind::T6; });
    if (it == current.cells.end()) return current;
    const Planarization& p = current.planarization;
    const std::vector<int>& walk = it->darts;  // three uncrossed edges, cell on the left

    // At corner j the walk leaves along `walk[j]`; the edge clockwise next to
    // it leads to u. The new edge starts at the corner before j.
    int j = 0, beside = -1, u = -1;
    for (; j < 3; ++j) {
      beside = p.rot_prev(walk[j]);
      u = p.segments[Planarization::segment_of(beside)].edge;
      u = current.other_endpoint(u, p.origin(walk[j]));
      if (u != p.origin(walk[(j + 2) % 3])) break;
    }
    if (j == 3) throw Error(ErrorKind::PreconditionFailed, "no edge to follow out of a T-cell");

    const int corner = p.origin(walk[j]);
    const int start = p.origin(walk[(j + 2) % 3]);
    const int guide = p.segments[Planarization::segment_of(beside)].edge;
    const int side_edge = p.segments[Planarization::segment_of(walk[j])].edge;
    const Edge& g = current.edges[guide];
    const Edge& f = current.edges[side_edge];
    const bool guide_forward = g.source == corner;

    Editable ed = editable(current);
    const std::string id = ed.fresh("t");
    const std::string fx = ed.fresh("y");
    std::vector<std::string> crossings{fx};

    // Crossing with f: toward f's far end, back into the cell, toward the corner, onward.
    const bool f_from_corner = f.source == corner;
    ed.crossing_rotation[fx] = {{f.id, f_from_corner}, {id, false}, {f.id, !f_from_corner}, {id, true}};
    ed.edge(f.id).crossings = {fx};

    // Follow the guide on its left, one crossing per crossing of the guide.
    std::vector<int> along = g.crossings;
    if (!guide_forward) std::reverse(along.begin(), along.end());
    for (int x : along) {
      const std::string& xid = current.crossings[x].id;
      const int other = current.other_edge(x, guide);
      const std::string& oid = current.edges[other].id;
      const std::vector<Editable::Side> old = ed.crossing_rotation[xid];
      // Guide's end toward u, and the entry that follows it counterclockwise.
      const Editable::Side ahead{g.id, guide_forward};
      const int k = static_cast<int>(std::find(old.begin(), old.end(), ahead) - old.begin());
      const Editable::Side left = old[(k + 1) % 4];
      const std::string nx = ed.fresh("y");
      std::vector<Editable::Side> rot;
      for (const auto& s : old) rot.push_back(s.edge == g.id ? Editable::Side{id, s == ahead} : s);
      ed.crossing_rotation[nx] = rot;
      auto& list = ed.edge(oid).crossings;
      auto pos = std::find(list.begin(), list.end(), xid);
      list.insert(left.toward_target ? pos + 1 : pos, nx);
      crossings.push_back(nx);
    }

    ed.edges.push_back({id, start, u, crossings});
    insert_after(ed, current, start, walk[(j + 2) % 3], {id, false});
    // At u the new edge sits clockwise next to the guide.
    const int guide_at_u = guide_forward ? p.dart(guide, static_cast<int>(g.crossings.size()), false)
                                         : p.dart(guide, 0, true);
    auto& rot_u = ed.vertex_rotation[u];
    rot_u.insert(rot_u.begin() + p.rotation_pos[guide_at_u], {id, true});
    current = rebuild(ed);
  }
  throw Error(ErrorKind::GenerationFailed, "eliminate_t_cells did not terminate");
}

}  // namespace drawkit
