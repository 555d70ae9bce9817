#include <gtest/gtest.h>

#include "drawkit/density.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/generators.hpp"
#include "support.hpp"

using namespace drawkit;
using namespace drawkit::testing;

namespace {

std::vector<Rational> sample_ts() {
  std::vector<Rational> ts{1, 2, 3, 4, 5, 6};
  for (int k = 3; k <= 6; ++k) ts.push_back(Rational(2 * k, 2 * k - 4));
  return ts;
}

InequalityReport bound(const Drawing& d, DrawingClass cls, Variant variant = Variant::unconstrained) {
  InequalityParams p;
  p.bound = {cls, variant, std::nullopt};
  return verify_inequality(d, CatalogId::BOUND, p);
}

}  // namespace

TEST(DensityFormula, Triangle) {
  const DensityEvaluation e = density_formula(load_drw("triangle.drw"), 5);
  EXPECT_EQ(e.vertex_term, 5);
  EXPECT_EQ(e.cell_term, 2);
  EXPECT_EQ(e.crossing_term, 0);
  EXPECT_EQ(e.rhs, 3);
  EXPECT_EQ(e.residual, 0);
}

TEST(DensityFormula, ConvexK4) {
  const Drawing d = load_drw("k4.drw");
  const DensityEvaluation five = density_formula(d, 5);
  EXPECT_EQ(five.vertex_term, 10);
  EXPECT_EQ(five.cell_term, 3);
  EXPECT_EQ(five.crossing_term, 1);
  EXPECT_EQ(five.rhs, 6);
  EXPECT_EQ(five.edges, 6);
  EXPECT_EQ(five.c5, 4);
  EXPECT_EQ(five.excess, 3);
  ASSERT_TRUE(five.r);
  EXPECT_EQ(*five.r, 5);
  EXPECT_EQ(five.five_rhs, 6);

  const DensityEvaluation three = density_formula(d, 3);
  EXPECT_EQ(three.vertex_term, 6);
  EXPECT_EQ(three.cell_term, -1);
  EXPECT_EQ(three.residual, 0);
}

TEST(DensityFormula, SingleEdge) {
  const DensityEvaluation e = density_formula(load_drw("single_edge.drw"), 5);
  EXPECT_EQ(e.vertex_term, 0);
  EXPECT_EQ(e.cell_term, -1);
  EXPECT_EQ(e.rhs, 1);
  EXPECT_EQ(e.residual, 0);
}

TEST(DensityFormula, TEqualsOneHasNoRatio) {
  const DensityEvaluation e = density_formula(load_drw("twoedges.drw"), 1);
  EXPECT_FALSE(e.r);
  EXPECT_EQ(e.residual, 0);
}

TEST(DensityFormula, ResidualZeroOnFuzz) {
  for (const auto& c : fuzz_cases(1, 100)) {
    for (const Rational& t : sample_ts()) {
      EXPECT_EQ(density_formula(c.drawing, t).residual, 0) << "seed " << c.seed << " t " << to_string(t);
    }
  }
}

TEST(Catalog, ConvexK4Examples) {
  const Drawing d = load_drw("k4.drw");
  const InequalityReport a = verify_inequality(d, CatalogId::A_LE_X);
  ASSERT_TRUE(a.applicable);
  EXPECT_TRUE(a.holds);
  ASSERT_FALSE(a.relations.empty());
  EXPECT_EQ(a.relations[0].lhs, 0);
  EXPECT_EQ(a.relations[0].rhs, 1);

  const InequalityReport b = bound(d, DrawingClass::one_planar);
  ASSERT_TRUE(b.applicable);
  EXPECT_TRUE(b.holds);
  EXPECT_FALSE(b.tight);
  EXPECT_EQ(b.relations[0].lhs, 6);
  EXPECT_EQ(b.relations[0].rhs, 8);
}

TEST(Catalog, QuasiplanarBoundIsTightOnGenerator) {
  const Drawing g10 = gen_quasiplanar_nonhomotopic(10);
  const InequalityReport r = bound(g10, DrawingClass::quasiplanar, Variant::non_homotopic);
  ASSERT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tight);
  EXPECT_EQ(r.relations[0].lhs, 60);
  EXPECT_EQ(r.relations[0].rhs, 60);
}

TEST(Catalog, SegmentCountsHoldOnFuzz) {
  for (const auto& c : fuzz_cases(1, 50)) {
    const InequalityReport r = verify_inequality(c.drawing, CatalogId::OBS1);
    EXPECT_TRUE(r.applicable && r.holds) << c.seed;
  }
}

TEST(Catalog, EverythingApplicableHoldsOnFuzz) {
  for (const auto& c : fuzz_cases(1, 60)) {
    for (const auto& r : verify_catalog(c.drawing)) {
      if (r.id == "LINK") continue;
      if (r.applicable) EXPECT_TRUE(r.holds) << c.seed << " " << r.id;
    }
  }
}

TEST(Catalog, NamesRoundTrip) {
  for (CatalogId id : all_catalog_ids()) EXPECT_EQ(parse_catalog_id(catalog_name(id)), id);
  EXPECT_FALSE(parse_catalog_id("NOPE"));
}

TEST(MaxEdges, TableValues) {
  EXPECT_EQ(max_edges(DrawingClass::two_planar, Variant::non_homotopic, 10), 40);
  EXPECT_EQ(max_edges(DrawingClass::rac2, Variant::non_homotopic, 10), 81);
  EXPECT_EQ(max_edges(DrawingClass::real_face, Variant::unconstrained, 10, 4), 16);
  EXPECT_EQ(max_edges(DrawingClass::quasiplanar, Variant::simple, 10), 45);
  EXPECT_EQ(max_edges(DrawingClass::quasiplanar, Variant::non_homotopic, 10), 60);
  EXPECT_EQ(max_edges(DrawingClass::one_planar, Variant::unconstrained, 8), 24);
}

TEST(MaxEdges, Errors) {
  try {
    max_edges(DrawingClass::one_planar, Variant::unconstrained, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NTooSmall);
  }
  try {
    parse_drawing_class("3-planar-ish");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownClass);
  }
}
