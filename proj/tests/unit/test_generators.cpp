#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "drawkit/classes.hpp"
#include "drawkit/density.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/generators.hpp"
#include "drawkit/properties.hpp"
#include "support.hpp"

using namespace drawkit;
using namespace drawkit::testing;

namespace {

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::Syntax;
}

std::set<std::pair<std::string, std::string>> adjacencies(const Drawing& d) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : d.edges) {
    auto a = d.vertex_ids[e.source], b = d.vertex_ids[e.target];
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

bool covers(const Drawing& after, const Drawing& before) {
  const auto a = adjacencies(after), b = adjacencies(before);
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

bool has_t6(const Drawing& d) { return compute_stats(d).count(CellKind::T6) > 0; }

}  // namespace

TEST(Generators, QuasiplanarNonHomotopicCounts) {
  for (int n = 4; n <= 25; ++n) {
    const Drawing d = gen_quasiplanar_nonhomotopic(n);
    EXPECT_EQ(d.vertex_count(), n);
    EXPECT_EQ(d.edge_count(), 8 * n - 20) << n;
    EXPECT_TRUE(is_quasiplanar(d)) << n;
    EXPECT_TRUE(is_non_homotopic(d)) << n;
  }
  const Drawing g25 = gen_quasiplanar_nonhomotopic(25);
  EXPECT_EQ(g25.edge_count(), 180);
  EXPECT_EQ(density_formula(g25, 5).residual, 0);
}

TEST(Generators, QuasiplanarNonHomotopicIsNotTwoPlanar) {
  bool found = false;
  for (int n = 6; n <= 12 && !found; ++n) found = !is_k_planar(gen_quasiplanar_nonhomotopic(n), 2);
  EXPECT_TRUE(found);
}

TEST(Generators, QuasiplanarSimpleCounts) {
  for (int n = 16; n <= 24; n += 2) {
    const Drawing d = gen_quasiplanar_simple(n);
    EXPECT_EQ(2 * d.edge_count(), 13 * n - 40) << n;
    EXPECT_TRUE(is_simple(d)) << n;
    EXPECT_TRUE(is_quasiplanar(d)) << n;
  }
}

TEST(Generators, QuasiplanarSimpleSmallNFailsLoudly) {
  // 6.5n - 20 edges cannot exist on 8 vertices: 32 > 28 pairs.
  EXPECT_EQ(error_of([] { gen_quasiplanar_simple(8); }), ErrorKind::GenerationFailed);
}

TEST(Generators, OnePlanarTight) {
  for (int n = 8; n <= 24; n += 2) {
    const Drawing d = gen_one_planar_tight(n);
    EXPECT_EQ(d.edge_count(), 4 * n - 8) << n;
    EXPECT_TRUE(is_k_planar(d, 1)) << n;
    EXPECT_TRUE(is_non_homotopic(d)) << n;
    InequalityParams p;
    p.bound = {DrawingClass::one_planar, Variant::unconstrained, std::nullopt};
    const InequalityReport r = verify_inequality(d, CatalogId::BOUND, p);
    EXPECT_TRUE(r.applicable && r.holds && r.tight) << n;
  }
  EXPECT_EQ(density_formula(gen_one_planar_tight(20), 5).residual, 0);
}

TEST(Generators, Errors) {
  EXPECT_EQ(error_of([] { gen_quasiplanar_nonhomotopic(3); }), ErrorKind::NTooSmall);
  EXPECT_EQ(error_of([] { gen_quasiplanar_simple(7); }), ErrorKind::NOdd);
  EXPECT_EQ(error_of([] { gen_quasiplanar_simple(6); }), ErrorKind::NTooSmall);
  EXPECT_EQ(error_of([] { gen_one_planar_tight(9); }), ErrorKind::NOdd);
  EXPECT_EQ(error_of([] { gen_one_planar_tight(6); }), ErrorKind::NTooSmall);
}

TEST(Fill, FourCycle) {
  const Drawing c4 = load_drw("cycle4.drw");
  const Drawing f = fill(c4);
  EXPECT_TRUE(is_filled(f));
  EXPECT_TRUE(covers(f, c4));
  EXPECT_GT(f.edge_count(), c4.edge_count());
  EXPECT_TRUE(fill(f).same_embedding(f));
}

TEST(Fill, AlreadyFilledIsUnchanged) {
  for (const char* name : {"triangle.drw", "k4_planar.drw"}) {
    const Drawing d = load_drw(name);
    EXPECT_TRUE(fill(d).same_embedding(d)) << name;
  }
  const Drawing tight = gen_one_planar_tight(8);
  EXPECT_TRUE(fill(tight).same_embedding(tight));
}

TEST(Fill, ConvexK4GetsUncrossedDiagonals) {
  const Drawing k4 = load_drw("k4.drw");
  const Drawing f = fill(k4);
  EXPECT_TRUE(is_filled(f));
  EXPECT_TRUE(is_non_homotopic(f));
  EXPECT_TRUE(is_quasiplanar(f));
  EXPECT_GT(f.edge_count(), k4.edge_count());
  EXPECT_EQ(f.crossing_count(), 1);
}

TEST(Fill, PostconditionsOnFuzz) {
  int changed = 0;
  for (const auto& c : fuzz_cases(1, 120)) {
    const Drawing& d = c.drawing;
    if (!is_non_homotopic(d) || !is_quasiplanar(d)) continue;
    const Drawing f = fill(d);
    EXPECT_TRUE(is_filled(f)) << c.seed;
    EXPECT_TRUE(is_non_homotopic(f)) << c.seed;
    EXPECT_TRUE(is_quasiplanar(f)) << c.seed;
    EXPECT_TRUE(covers(f, d)) << c.seed;
    EXPECT_TRUE(fill(f).same_embedding(f)) << c.seed;
    changed += f.edge_count() > d.edge_count();
  }
  EXPECT_GT(changed, 0);
}

TEST(FillSimple, ReplacesCrossedCopy) {
  const Drawing d = to_combinatorial(load_geo("octahedron_detour.geo"));
  ASSERT_FALSE(is_filled(d));
  const Drawing f = fill_simple(d);
  EXPECT_TRUE(is_simple(f));
  EXPECT_TRUE(is_filled(f));
  EXPECT_TRUE(is_quasiplanar(f));
  EXPECT_TRUE(covers(f, d));
  EXPECT_EQ(f.edge_count(), d.edge_count());
  for (const Edge& e : f.edges) {
    const bool is_ab = (f.vertex_ids[e.source] == "a" && f.vertex_ids[e.target] == "b") ||
                       (f.vertex_ids[e.source] == "b" && f.vertex_ids[e.target] == "a");
    if (is_ab) EXPECT_TRUE(e.crossings.empty());
  }
  EXPECT_TRUE(fill_simple(f).same_embedding(f));
}

TEST(FillSimple, FilledInputUnchanged) {
  const Drawing tight = gen_one_planar_tight(8);
  EXPECT_TRUE(fill_simple(tight).same_embedding(tight));
}

TEST(FillSimple, ConvexK4BecomesPlanar) {
  const Drawing k4 = load_drw("k4.drw");
  const Drawing f = fill_simple(k4);
  EXPECT_TRUE(is_simple(f));
  EXPECT_TRUE(is_filled(f));
  EXPECT_EQ(f.edge_count(), 6);
  EXPECT_EQ(f.crossing_count(), 0);
}

TEST(FillSimple, NeedsThreeConnectivity) {
  EXPECT_EQ(error_of([] { fill_simple(load_drw("cycle4.drw")); }), ErrorKind::PreconditionFailed);
}

TEST(EliminateTCells, PlanarK4) {
  const Drawing d = load_drw("k4_planar.drw");
  ASSERT_TRUE(has_t6(d));
  const Drawing e = eliminate_t_cells(d);
  EXPECT_FALSE(has_t6(e));
  EXPECT_TRUE(is_filled(e));
  EXPECT_TRUE(is_non_homotopic(e));
  EXPECT_TRUE(is_quasiplanar(e));
  EXPECT_TRUE(covers(e, d));
  EXPECT_TRUE(eliminate_t_cells(e).same_embedding(e));
}

TEST(EliminateTCells, NoTCellsIsIdentity) {
  const Drawing tight = gen_one_planar_tight(8);
  ASSERT_FALSE(has_t6(tight));
  EXPECT_TRUE(eliminate_t_cells(tight).same_embedding(tight));
}

TEST(EliminateTCells, NeedsFilledInput) {
  EXPECT_EQ(error_of([] { eliminate_t_cells(load_drw("k4.drw")); }), ErrorKind::PreconditionFailed);
}

TEST(EliminateTCells, AfterFillingGenerator) {
  const Drawing f = fill(gen_quasiplanar_nonhomotopic(6));
  const Drawing e = eliminate_t_cells(f);
  EXPECT_FALSE(has_t6(e));
  EXPECT_GE(e.edge_count(), f.edge_count());
  EXPECT_TRUE(is_filled(e) && is_non_homotopic(e) && is_quasiplanar(e));
}
