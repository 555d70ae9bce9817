#include <gtest/gtest.h>

#include <set>

#include "drawkit/classes.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/properties.hpp"
#include "support.hpp"

using namespace drawkit;
using namespace drawkit::testing;

namespace {

Drawing from_geo(const std::string& text) { return to_combinatorial(parse_geo(text), Surface::plane); }

const char* kAdjacentCrossing =
    "vertex u 0 0\nvertex v 4 0\nvertex w 5 -1\n"
    "edge uv u v\nedge uw u w via 2 1 3 -1\n";

// f dips below e twice; g and h cross each other between them.
const char* kWitnessedLens =
    "vertex a 0 0\nvertex b 10 0\nvertex c 0 1\nvertex d 10 1\n"
    "vertex g1 4 -3\nvertex g2 6 3\nvertex h1 6 -3\nvertex h2 4 2\n"
    "edge e a b\nedge f c d via 3 -1 7 -1\nedge g g1 g2\nedge h h1 h2\n";

const char* kThreeCrossing =
    "vertex a 0 0\nvertex b 10 10\nvertex c 10 0\nvertex d 0 10\nvertex p 0 3\nvertex q 10 6\n"
    "edge ab a b\nedge cd c d\nedge pq p q\n";

const char* kFanBroken =
    "vertex a 0 0\nvertex b 10 0\nvertex c 2 -1\nvertex d 2 1\nvertex p 5 -1\nvertex q 5 1\n"
    "edge e a b\nedge f c d\nedge g p q\n";

}  // namespace

TEST(Simple, Basics) {
  EXPECT_TRUE(is_simple(load_drw("k4.drw")));
  EXPECT_TRUE(is_simple(load_drw("triangle.drw")));

  const auto parallel = find_simple_violation(load_drw("bigon.drw"));
  ASSERT_TRUE(parallel);
  EXPECT_EQ(parallel->reason, "parallel");

  const auto adjacent = find_simple_violation(from_geo(kAdjacentCrossing));
  ASSERT_TRUE(adjacent);
  EXPECT_EQ(adjacent->reason, "adjacent crossing");

  const Drawing lens = from_geo(kWitnessedLens);
  const auto twice = find_simple_violation(lens);
  ASSERT_TRUE(twice);
  EXPECT_EQ(twice->reason, "double crossing");
}

TEST(Lenses, EmptyBigon) {
  const Drawing d = load_drw("bigon.drw");
  const auto lenses = find_empty_lenses(d);
  ASSERT_EQ(lenses.size(), 1u);
  EXPECT_TRUE(lenses[0].p.is_vertex);
  EXPECT_TRUE(lenses[0].q.is_vertex);
  EXPECT_FALSE(is_non_homotopic(d));
}

TEST(Lenses, ConvexK4HasNone) {
  const Drawing d = load_drw("k4.drw");
  EXPECT_TRUE(find_lenses(d).empty());
  EXPECT_TRUE(is_non_homotopic(d));
}

TEST(Lenses, CrossingInsideWitnessesTheLens) {
  const Drawing d = from_geo(kWitnessedLens);
  const auto lenses = find_lenses(d);
  ASSERT_EQ(lenses.size(), 1u);
  const Lens& l = lenses[0];
  EXPECT_FALSE(l.empty);
  ASSERT_TRUE(l.witness);
  EXPECT_FALSE(l.witness->is_vertex);
  const Crossing& inside = d.crossings[l.witness->id];
  const std::set<std::string> pair{d.edges[inside.edge_a].id, d.edges[inside.edge_b].id};
  EXPECT_EQ(pair, (std::set<std::string>{"g", "h"}));
  EXPECT_TRUE(is_non_homotopic(d));
}

TEST(Filled, Basics) {
  const Drawing tri = load_drw("triangle.drw");
  EXPECT_TRUE(is_filled(tri));
  EXPECT_EQ(max_distinct_vertices_per_cell(tri), 3);

  const Drawing c4 = load_drw("cycle4.drw");
  EXPECT_FALSE(is_filled(c4));
  EXPECT_EQ(max_distinct_vertices_per_cell(c4), 4);
  const auto w = find_unfilled_pair(c4);
  ASSERT_TRUE(w);
  EXPECT_EQ((w->u + w->v) % 2, 0);  // opposite corners

  // The outer cell of the convex K4 sees a and c, joined only by a crossed edge.
  const Drawing k4 = load_drw("k4.drw");
  EXPECT_FALSE(is_filled(k4));
  EXPECT_EQ(max_distinct_vertices_per_cell(k4), 4);
}

TEST(Bipartition, Basics) {
  const Drawing c4 = load_drw("cycle4.drw");
  const Bipartition b = bipartition(c4);
  ASSERT_TRUE(b.bipartite);
  const auto& col = b.color;
  EXPECT_EQ(col[c4.vertex_index.at("a")], col[c4.vertex_index.at("c")]);
  EXPECT_EQ(col[c4.vertex_index.at("b")], col[c4.vertex_index.at("d")]);
  EXPECT_NE(col[c4.vertex_index.at("a")], col[c4.vertex_index.at("b")]);

  for (const char* name : {"triangle.drw", "k4.drw"}) {
    const Bipartition nb = bipartition(load_drw(name));
    EXPECT_FALSE(nb.bipartite) << name;
    EXPECT_EQ(nb.odd_walk.size() % 2, 1u) << name;
  }
}

TEST(Quasiplanar, Basics) {
  EXPECT_TRUE(is_quasiplanar(load_drw("k4.drw")));
  const Drawing d = from_geo(kThreeCrossing);
  const auto t = find_crossing_triangle(d);
  ASSERT_TRUE(t);
  std::set<int> edges(t->begin(), t->end());
  EXPECT_EQ(edges.size(), 3u);
  EXPECT_FALSE(is_quasiplanar(d));
}

TEST(FanCrossing, Basics) {
  EXPECT_TRUE(is_fan_crossing(load_drw("k4.drw")));
  EXPECT_TRUE(is_fan_crossing(load_drw("triangle.drw")));
  const Drawing d = from_geo(kFanBroken);
  const auto e = find_fan_violation(d);
  ASSERT_TRUE(e);
  EXPECT_EQ(d.edges[*e].id, "e");
}

TEST(KPlanar, Basics) {
  const Drawing k4 = load_drw("k4.drw");
  EXPECT_TRUE(is_k_planar(k4, 1));
  EXPECT_FALSE(is_k_planar(k4, 0));
  EXPECT_TRUE(is_k_planar(load_drw("triangle.drw"), 0));
}

TEST(RealFace, Levels) {
  EXPECT_EQ(real_face_level(load_drw("triangle.drw")), 3);
  EXPECT_EQ(real_face_level(load_drw("k4.drw")), 2);
  EXPECT_TRUE(is_k_plus_real_face(load_drw("k4.drw"), 2));
  EXPECT_FALSE(is_k_plus_real_face(load_drw("k4.drw"), 3));
  const Drawing grid = to_combinatorial(load_geo("rac0_grid.geo"));
  ASSERT_GT(compute_stats(grid).count(CellKind::Q4), 0);
  EXPECT_EQ(real_face_level(grid), 0);
}

TEST(ClassReport, Fixtures) {
  const ClassReport k4 = class_report(load_drw("k4.drw"));
  EXPECT_TRUE(k4.simple);
  EXPECT_TRUE(k4.non_homotopic);
  EXPECT_TRUE(k4.quasiplanar);
  EXPECT_TRUE(k4.fan_crossing);
  EXPECT_EQ(k4.max_crossings_per_edge, 1);
  EXPECT_EQ(k4.real_face_level, 2);

  const ClassReport tri = class_report(load_drw("triangle.drw"));
  EXPECT_TRUE(tri.simple && tri.non_homotopic && tri.quasiplanar && tri.fan_crossing && tri.filled);
  EXPECT_EQ(tri.max_crossings_per_edge, 0);

  const ClassReport bigon = class_report(load_drw("bigon.drw"));
  EXPECT_FALSE(bigon.simple);
  EXPECT_FALSE(bigon.non_homotopic);
  EXPECT_EQ(bigon.empty_lenses, 1);
}
