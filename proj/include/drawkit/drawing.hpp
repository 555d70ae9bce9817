#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace drawkit {

enum class Surface { sphere, plane };

// One end of an edge at a vertex: e@s or e@t.
struct EdgeEnd {
  int edge = -1;
  bool at_target = false;
  bool operator==(const EdgeEnd&) const = default;
};

// Segment `segment` of `edge`, seen from a crossing it ends at.
struct SegmentEnd {
  int edge = -1;
  int segment = -1;
  bool operator==(const SegmentEnd&) const = default;
};

// The unbounded cell of a plane drawing is the one left of this dart.
struct OuterDart {
  int edge = -1;
  int segment = -1;
  bool forward = true;
  bool operator==(const OuterDart&) const = default;
};

struct Edge {
  std::string id;
  int source = -1;
  int target = -1;
  std::vector<int> crossings;  // ordered from source to target
  bool operator==(const Edge&) const = default;
};

struct Crossing {
  std::string id;
  int edge_a = -1;
  int pos_a = -1;
  int edge_b = -1;
  int pos_b = -1;
  bool operator==(const Crossing&) const = default;
};

// Unvalidated drawing description, referencing elements by id. Line numbers
// point back into the source text when there is one.
struct DrawingSpec {
  struct VertexLine {
    std::string id;
    int line = 0;
  };
  struct EdgeLine {
    std::string id, source, target;
    std::vector<std::string> crossings;
    int line = 0;
  };
  struct CrossingLine {
    std::string id, edge_a, edge_b;
    int line = 0;
  };
  struct EndRef {
    std::string edge;
    bool at_target = false;
  };
  struct SegRef {
    std::string edge;
    int segment = 0;
  };
  struct VertexRotation {
    std::string vertex;
    std::vector<EndRef> ends;
    int line = 0;
  };
  struct CrossingRotation {
    std::string crossing;
    std::vector<SegRef> ends;
    int line = 0;
  };
  struct OuterLine {
    std::string edge;
    int segment = 0;
    bool forward = true;
    int line = 0;
  };

  Surface surface = Surface::sphere;
  std::vector<VertexLine> vertices;
  std::vector<EdgeLine> edges;
  std::vector<CrossingLine> crossings;
  std::vector<VertexRotation> vertex_rotations;
  std::vector<CrossingRotation> crossing_rotations;
  std::optional<OuterLine> outer_dart;
};

struct Segment {
  int edge = -1;
  int index = -1;
  int tail = -1;
  int head = -1;
};

// Nodes 0..V-1 are vertices, V..V+X-1 are crossings. Every segment s owns
// darts 2s (tail to head) and 2s+1 (head to tail).
struct Planarization {
  int vertex_count = 0;
  int node_count = 0;
  std::vector<Segment> segments;
  std::vector<int> first_segment;          // per edge
  std::vector<std::vector<int>> rotation;  // per node, darts leaving it, counterclockwise
  std::vector<int> rotation_pos;           // per dart, index in its origin's rotation

  static int twin(int dart) { return dart ^ 1; }
  static int segment_of(int dart) { return dart >> 1; }
  static bool is_forward(int dart) { return (dart & 1) == 0; }
  int origin(int dart) const;
  int destination(int dart) const;
  int rot_next(int dart) const;
  int rot_prev(int dart) const;
  // Successor on the boundary walk keeping the cell on the left.
  int face_next(int dart) const { return rot_prev(twin(dart)); }
  int segment_id(int edge, int index) const { return first_segment[edge] + index; }
  int dart(int edge, int index, bool forward) const {
    return 2 * segment_id(edge, index) + (forward ? 0 : 1);
  }
  bool is_vertex(int node) const { return node < vertex_count; }
  int dart_count() const { return 2 * static_cast<int>(segments.size()); }
};

enum class CellKind { TRI3, A4, Q4, D5, W5, P5, T6, OTHER };
inline constexpr int kCellKindCount = 8;

const char* cell_kind_name(CellKind kind);

struct CellClass {
  CellKind kind = CellKind::OTHER;
  int size = 0;
  bool degenerate = false;
};

std::string to_string(const CellClass& cls);

struct Incidence {
  enum class Kind { vertex, segment, crossing };
  Kind kind = Kind::vertex;
  int id = -1;  // vertex index, dart, or crossing index
};

struct Cell {
  int id = -1;
  std::vector<int> darts;  // boundary walk
  std::vector<Incidence> walk;
  int size = 0;
  int vertex_incidences = 0;
  int segment_incidences = 0;
  int crossing_incidences = 0;
  std::vector<int> distinct_vertices;
  CellClass cls;
  bool unbounded = false;
};

CellClass classify_cell(const Cell& cell);

struct Drawing {
  Surface surface = Surface::sphere;
  std::optional<OuterDart> outer_dart;
  std::vector<std::string> vertex_ids;
  std::vector<Edge> edges;
  std::vector<Crossing> crossings;
  std::vector<std::vector<EdgeEnd>> vertex_rotations;
  std::vector<std::array<SegmentEnd, 4>> crossing_rotations;

  // Derived during build_drawing.
  Planarization planarization;
  std::vector<Cell> cells;
  std::vector<int> cell_of_dart;
  std::unordered_map<std::string, int> vertex_index;
  std::unordered_map<std::string, int> edge_index;
  std::unordered_map<std::string, int> crossing_index;

  int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int degree(int v) const { return static_cast<int>(vertex_rotations[v].size()); }
  int other_endpoint(int edge, int v) const;
  // Position of crossing x in the list of edge e.
  int position_in(int x, int e) const;
  int other_edge(int x, int e) const;

  // Equality of the embedding data, ignoring derived fields.
  bool same_embedding(const Drawing& other) const;
};

Drawing build_drawing(const DrawingSpec& spec);
DrawingSpec to_spec(const Drawing& d);

const Planarization& planarize(const Drawing& d);
const std::vector<Cell>& enumerate_cells(const Drawing& d);

struct DrawingStats {
  int vertices = 0;
  int edges = 0;
  int crossed_edges = 0;
  int planar_edges = 0;
  int crossings = 0;
  int segments = 0;
  int inner_segments = 0;
  int cells = 0;
  std::array<int, kCellKindCount> kind_counts{};
  std::vector<std::pair<int, int>> size_histogram;  // (size, count), ascending
  std::vector<int> degrees;

  int count(CellKind kind) const { return kind_counts[static_cast<int>(kind)]; }
  int cells_of_size(int size) const;
};

DrawingStats compute_stats(const Drawing& d);

// Result of removing a vertex and measuring the cell it leaves behind.
struct LinkResult {
  Drawing residual;
  int link_cell = -1;
  int link_size = 0;
  std::vector<int> incident_cells;  // one per angle at the vertex, in rotation order
  long long predicted_size = 0;     // sum over incident cells of (size - 5), plus their number
};

LinkResult link_of_vertex(const Drawing& d, int v);

}  // namespace drawkit
