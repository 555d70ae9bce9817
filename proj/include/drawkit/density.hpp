#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drawkit/drawing.hpp"
#include "drawkit/rational.hpp"

namespace drawkit {

struct DensityEvaluation {
  Rational t;
  Rational vertex_term;    // t(|V|-2)
  Rational cell_term;      // sum over cells of ((t-1)/4 |c| - t)
  Rational crossing_term;  // |X|
  Rational rhs;
  long long edges = 0;
  Rational residual;       // |E| - rhs
  std::optional<Rational> r;  // 4t/(t-1)
  int c3 = 0;
  int c4 = 0;
  int c5 = 0;
  int below3 = 0;          // cells of size 1 or 2 (only without non-homotopy)
  long long excess = 0;    // sum over cells of size >= 5 of (|c| - 5)

  // t = 4 decomposition: |E| <= four_bound.
  Rational four_bound;
  // t = 5 decomposition: |E| = five_rhs.
  Rational five_rhs;
};

DensityEvaluation density_formula(const Drawing& d, const Rational& t);

enum class CatalogId {
  OBS1,
  LEM_4N8,
  A_LE_X,
  B_GEN,
  LINK,
  RAC_K,
  FC_C4,
  FC_THM,
  BIP_FC,
  QP_NOHOM,
  QP_SIMPLE,
  TWO_PLANAR,
  BOUND,
};

const char* catalog_name(CatalogId id);
std::optional<CatalogId> parse_catalog_id(const std::string& name);
const std::vector<CatalogId>& all_catalog_ids();

enum class DrawingClass {
  rac0,
  rac1,
  rac2,
  fan_crossing,
  bipartite_fan_crossing,
  quasiplanar,
  real_face,  // k+ real face, k given separately
  one_planar,
  two_planar,
};

enum class Variant { unconstrained, simple, non_homotopic };

const char* class_name(DrawingClass c);
const char* variant_name(Variant v);
DrawingClass parse_drawing_class(const std::string& name);  // throws UnknownClass

// Table of upper bounds on |E|.
Rational max_edges(DrawingClass cls, Variant variant, int n, std::optional<int> k = std::nullopt);

// Metric facts about a polyline realization, supplied by the geometry module.
struct RacCertificate {
  bool right_angles = false;
  int max_bends_on_crossed_edges = 0;
  int max_bends = 0;
};

struct BoundTarget {
  DrawingClass cls = DrawingClass::quasiplanar;
  Variant variant = Variant::non_homotopic;
  std::optional<int> k;
};

struct InequalityParams {
  int vertex = -1;  // LINK: -1 checks every vertex
  int k = 1;        // RAC_K bend budget
  std::optional<RacCertificate> rac;
  BoundTarget bound;
};

struct Precondition {
  std::string name;
  bool holds = false;
};

struct Relation {
  std::string label;
  Rational lhs;
  Rational rhs;
  std::string op;  // "=", "<=", ">="
  bool applicable = true;
  bool holds = false;
};

struct InequalityReport {
  std::string id;
  std::vector<Precondition> preconditions;
  bool applicable = false;  // every precondition holds
  std::vector<Relation> relations;
  bool holds = false;       // every applicable relation holds
  bool tight = false;       // an inequality met with equality
  std::vector<std::string> notes;
};

InequalityReport verify_inequality(const Drawing& d, CatalogId id, const InequalityParams& params = {});

// Every catalog entry, plus each bound whose class the drawing belongs to.
std::vector<InequalityReport> verify_catalog(const Drawing& d, const std::optional<RacCertificate>& rac = std::nullopt);

}  // namespace drawkit
