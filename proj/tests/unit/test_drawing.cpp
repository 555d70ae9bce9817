#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "drawkit/errors.hpp"
#include "drawkit/properties.hpp"
#include "support.hpp"

using namespace drawkit;
using namespace drawkit::testing;

namespace {

ErrorKind build_error(const std::string& text) {
  try {
    from_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorKind::Syntax;
}

std::vector<int> sorted_sizes(const Drawing& d) {
  std::vector<int> s;
  for (const Cell& c : d.cells) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> oracle_sizes(const GeomDrawing& g) {
  std::vector<int> s;
  for (const auto& [v, seg] : geometric_cells(g)) s.push_back(v + seg);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(BuildDrawing, Triangle) {
  const Drawing d = load_drw("triangle.drw");
  EXPECT_EQ(d.vertex_count(), 3);
  EXPECT_EQ(d.planarization.node_count, 3);
  EXPECT_EQ(d.planarization.segments.size(), 3u);
  EXPECT_EQ(sorted_sizes(d), (std::vector<int>{6, 6}));
}

TEST(BuildDrawing, ConvexK4AgainstGeometry) {
  const Drawing d = load_drw("k4.drw");
  EXPECT_EQ(d.crossing_count(), 1);
  EXPECT_EQ(d.planarization.node_count, 5);
  EXPECT_EQ(d.planarization.segments.size(), 8u);
  EXPECT_EQ(sorted_sizes(d), oracle_sizes(load_geo("k4.geo")));
  int d5 = 0, unbounded = 0;
  for (const Cell& c : d.cells) {
    d5 += c.cls.kind == CellKind::D5;
    unbounded += c.unbounded;
    if (c.unbounded) EXPECT_EQ(c.size, 8);
  }
  EXPECT_EQ(d5, 4);
  EXPECT_EQ(unbounded, 1);
}

TEST(BuildDrawing, SingleEdge) {
  const Drawing d = load_drw("single_edge.drw");
  EXPECT_EQ(d.planarization.node_count, 2);
  EXPECT_EQ(d.planarization.segments.size(), 1u);
  ASSERT_EQ(d.cells.size(), 1u);
  EXPECT_EQ(d.cells[0].size, 4);
  EXPECT_EQ(d.cells[0].vertex_incidences, 2);
  EXPECT_EQ(d.cells[0].segment_incidences, 2);
}

TEST(BuildDrawing, Errors) {
  const std::string k4_head =
      "surface sphere\nvertex a\nvertex b\nvertex c\nvertex d\n"
      "edge ab a b\nedge bc b c\nedge cd c d\nedge da d a\n"
      "edge ac a c cross x\nedge bd b d cross x\ncross x ac bd\n"
      "rot a ab@s ac@s da@t\nrot b bc@s bd@s ab@t\nrot c cd@s ac@t bc@t\nrot d cd@t da@s bd@t\n";
  EXPECT_NO_THROW(from_text(k4_head + "rotx x ac@1 bd@1 ac@0 bd@0\n"));
  EXPECT_EQ(build_error(k4_head + "rotx x ac@1 ac@0 bd@1 bd@0\n"), ErrorKind::NonAlternatingCrossing);
  EXPECT_EQ(build_error(k4_head), ErrorKind::BadRotation);
  EXPECT_EQ(build_error("vertex a\nedge e a a\n"), ErrorKind::LoopEdge);
  EXPECT_EQ(build_error("vertex a\nvertex b\nedge e a b\nedge f a b\ncross x e f\n"), ErrorKind::DanglingCrossing);
  EXPECT_EQ(build_error("vertex a\nvertex b\nedge e a b cross x\ncross x e e\n"), ErrorKind::SelfCrossingEdge);
  EXPECT_EQ(build_error("vertex a\nvertex b\nvertex c\nvertex d\nedge e a b\nedge f c d\n"),
            ErrorKind::DisconnectedPlanarization);
  EXPECT_EQ(build_error("vertex a\nvertex b\nedge e a b\nrot a e@s e@t\n"), ErrorKind::BadRotation);
  // K4 with one rotation reversed embeds on the torus.
  const std::string torus =
      "vertex a\nvertex b\nvertex c\nvertex d\n"
      "edge ab a b\nedge bc b c\nedge ca c a\nedge ad a d\nedge bd b d\nedge cd c d\n"
      "rot a ab@s ad@s ca@t\nrot b bc@s bd@s ab@t\nrot c ca@s cd@s bc@t\nrot d cd@t bd@t ad@t\n";
  EXPECT_EQ(build_error(torus), ErrorKind::NotSphere);
}

TEST(BuildDrawing, RoundTrip) {
  for (const char* name : {"triangle.drw", "k4.drw", "k4_sphere.drw", "bigon.drw", "star.drw", "k4_planar.drw"}) {
    const Drawing d = load_drw(name);
    EXPECT_TRUE(from_text(serialize_drw(d)).same_embedding(d)) << name;
  }
  for (const auto& c : fuzz_cases(1, 60)) {
    EXPECT_TRUE(from_text(serialize_drw(c.drawing)).same_embedding(c.drawing)) << c.seed;
  }
}

TEST(Planarization, CountingIdentities) {
  for (const auto& c : fuzz_cases(100, 80)) {
    const Drawing& d = c.drawing;
    const DrawingStats s = compute_stats(d);
    EXPECT_EQ(s.segments, 2 * s.crossings + s.edges);
    EXPECT_EQ(s.inner_segments, 2 * s.crossings - s.crossed_edges);
    EXPECT_EQ(s.crossed_edges + s.planar_edges, s.edges);
    EXPECT_EQ(s.vertices + s.crossings - s.segments + s.cells, 2);
    int size_sum = 0;
    for (const Cell& cell : d.cells) size_sum += cell.size;
    EXPECT_EQ(size_sum, 2 * s.segments + std::accumulate(s.degrees.begin(), s.degrees.end(), 0)) << c.seed;

    // Every dart on exactly one walk.
    std::vector<int> seen(d.planarization.dart_count(), 0);
    for (const Cell& cell : d.cells) {
      for (int dart : cell.darts) ++seen[dart];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; })) << c.seed;
  }
}

TEST(CellClasses, SmallCellsOfNonHomotopicDrawingsAreTagged) {
  int tagged = 0;
  for (const auto& c : fuzz_cases(300, 120)) {
    const Drawing& d = c.drawing;
    if (d.vertex_count() < 3 || !is_non_homotopic(d)) continue;
    for (const Cell& cell : d.cells) {
      if (cell.size < 3 || cell.size > 5) continue;
      ++tagged;
      EXPECT_NE(cell.cls.kind, CellKind::OTHER) << c.seed << " cell " << cell.id;
      if (cell.size == 3) EXPECT_EQ(cell.cls.kind, CellKind::TRI3);
    }
  }
  EXPECT_GT(tagged, 0);
}

TEST(Link, ConvexK4) {
  const Drawing d = load_drw("k4.drw");
  const LinkResult r = link_of_vertex(d, d.vertex_index.at("a"));
  EXPECT_EQ(r.incident_cells.size(), 3u);
  EXPECT_EQ(r.link_size, 6);
  EXPECT_EQ(r.predicted_size, 6);
  // b, c, d and the free end left where ac was cut at its crossing.
  EXPECT_EQ(r.residual.vertex_count(), 4);
  EXPECT_EQ(r.residual.edge_count(), 4);
  EXPECT_EQ(r.residual.cells[r.link_cell].size, 6);
}

TEST(Link, Triangle) {
  const Drawing d = load_drw("triangle.drw");
  for (int v = 0; v < 3; ++v) {
    const LinkResult r = link_of_vertex(d, v);
    EXPECT_EQ(r.link_size, 4);
    EXPECT_EQ(r.predicted_size, 4);
  }
}

TEST(Link, Preconditions) {
  auto kind = [](const Drawing& d, int v) {
    try {
      link_of_vertex(d, v);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Syntax;
  };
  EXPECT_EQ(kind(load_drw("single_edge.drw"), 0), ErrorKind::PreconditionFailed);
  // The star's centre meets its only cell at three angles.
  const Drawing star = load_drw("star.drw");
  EXPECT_EQ(kind(star, star.vertex_index.at("o")), ErrorKind::PreconditionFailed);
}

TEST(Link, IdentityWhereItsPreconditionsHold) {
  int checked = 0;
  for (const auto& c : fuzz_cases(500, 150)) {
    const Drawing& d = c.drawing;
    if (d.vertex_count() < 3 || !is_non_homotopic(d)) continue;
    for (int v = 0; v < d.vertex_count(); ++v) {
      try {
        const LinkResult r = link_of_vertex(d, v);
        EXPECT_EQ(r.link_size, r.predicted_size) << c.seed << " vertex " << v;
        ++checked;
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
      }
    }
  }
  EXPECT_GT(checked, 50);
}
