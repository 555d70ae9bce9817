#include "drawkit/density.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "drawkit/classes.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/properties.hpp"

namespace drawkit {

DensityEvaluation density_formula(const Drawing& d, const Rational& t) {
  if (d.edge_count() < 1) throw Error(ErrorKind::PreconditionFailed, "density formula needs at least one edge");

  DensityEvaluation ev;
  ev.t = t;
  ev.edges = d.edge_count();
  const Rational vertices = d.vertex_count();
  const Rational crossings = d.crossing_count();
  ev.vertex_term = t * (vertices - 2);
  const Rational weight = (t - 1) / 4;
  Rational small_four = 0;
  Rational small_five = 0;
  for (const Cell& c : d.cells) {
    ev.cell_term += weight * c.size - t;
    if (c.size == 3) ++ev.c3;
    if (c.size == 4) ++ev.c4;
    if (c.size == 5) ++ev.c5;
    if (c.size < 3) ++ev.below3;
    if (c.size >= 5) ev.excess += c.size - 5;
    if (c.size <= 5) small_four += Rational(4) - Rational(3, 4) * c.size;
    if (c.size < 5) small_five += 5 - c.size;
  }
  ev.crossing_term = crossings;
  ev.rhs = ev.vertex_term - ev.cell_term - ev.crossing_term;
  ev.residual = Rational(ev.edges) - ev.rhs;
  if (t != 1) ev.r = 4 * t / (t - 1);
  ev.four_bound = 4 * vertices - 8 + small_four - crossings;
  ev.five_rhs = 5 * vertices - 10 + small_five - crossings - Rational(ev.excess);
  return ev;
}

namespace {

struct CatalogEntry {
  CatalogId id;
  const char* name;
};

constexpr CatalogEntry kCatalog[] = {
    {CatalogId::OBS1, "OBS1"},         {CatalogId::LEM_4N8, "LEM_4N8"},       {CatalogId::A_LE_X, "A_LE_X"},
    {CatalogId::B_GEN, "B_GEN"},       {CatalogId::LINK, "LINK"},             {CatalogId::RAC_K, "RAC_K"},
    {CatalogId::FC_C4, "FC_C4"},       {CatalogId::FC_THM, "FC_THM"},         {CatalogId::BIP_FC, "BIP_FC"},
    {CatalogId::QP_NOHOM, "QP_NOHOM"}, {CatalogId::QP_SIMPLE, "QP_SIMPLE"}, {CatalogId::TWO_PLANAR, "TWO_PLANAR"},
    {CatalogId::BOUND, "BOUND"},
};

}  // namespace

const char* catalog_name(CatalogId id) {
  for (const auto& entry : kCatalog) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

std::optional<CatalogId> parse_catalog_id(const std::string& name) {
  for (const auto& entry : kCatalog) {
    if (name == entry.name) return entry.id;
  }
  return std::nullopt;
}

const std::vector<CatalogId>& all_catalog_ids() {
  static const std::vector<CatalogId> ids = [] {
    std::vector<CatalogId> out;
    for (const auto& entry : kCatalog) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

namespace {

constexpr std::pair<DrawingClass, const char*> kClassNames[] = {
    {DrawingClass::rac0, "rac0"},
    {DrawingClass::rac1, "rac1"},
    {DrawingClass::rac2, "rac2"},
    {DrawingClass::fan_crossing, "fan-crossing"},
    {DrawingClass::bipartite_fan_crossing, "bipartite-fan-crossing"},
    {DrawingClass::quasiplanar, "quasiplanar"},
    {DrawingClass::real_face, "real-face"},
    {DrawingClass::one_planar, "1-planar"},
    {DrawingClass::two_planar, "2-planar"},
};

}  // namespace

const char* class_name(DrawingClass c) {
  for (const auto& [cls, name] : kClassNames) {
    if (cls == c) return name;
  }
  return "?";
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::unconstrained: return "unconstrained";
    case Variant::simple: return "simple";
    case Variant::non_homotopic: return "non-homotopic";
  }
  return "?";
}

DrawingClass parse_drawing_class(const std::string& name) {
  for (const auto& [cls, n] : kClassNames) {
    if (name == n) return cls;
  }
  throw Error(ErrorKind::UnknownClass, "unknown drawing class '" + name + "'");
}

Rational max_edges(DrawingClass cls, Variant variant, int n, std::optional<int> k) {
  auto need = [&](int minimum) {
    if (n < minimum) {
      throw Error(ErrorKind::NTooSmall, std::string("bound for ") + class_name(cls) + " needs n >= " +
                                            std::to_string(minimum));
    }
  };
  const Rational nn = n;
  switch (cls) {
    case DrawingClass::rac0:
    case DrawingClass::one_planar:
      need(3);
      return 4 * nn - 8;
    case DrawingClass::rac1:
    case DrawingClass::fan_crossing:
    case DrawingClass::two_planar:
      need(3);
      return 5 * nn - 10;
    case DrawingClass::rac2:
      need(3);
      return 2 * (5 * nn - 10) + 1;
    case DrawingClass::bipartite_fan_crossing:
      need(3);
      return 4 * nn - 10;
    case DrawingClass::quasiplanar:
      if (variant == Variant::simple) {
        need(4);
        return Rational(13, 2) * nn - 20;
      }
      if (variant == Variant::non_homotopic) {
        need(3);
        return 8 * nn - 20;
      }
      throw Error(ErrorKind::UnknownClass, "quasiplanar bound needs the simple or non-homotopic variant");
    case DrawingClass::real_face: {
      if (!k || *k < 1) throw Error(ErrorKind::UnknownClass, "real-face bound needs k >= 1");
      need(3);
      if (*k == 1) return 5 * nn - 10;
      if (*k == 2) return 4 * nn - 8;
      return Rational(*k, *k - 2) * (nn - 2);
    }
  }
  throw Error(ErrorKind::UnknownClass, "unknown drawing class");
}

namespace {

// Lazily computed facts shared by the catalog entries.
class Facts {
 public:
  explicit Facts(const Drawing& d) : d_(d), stats_(compute_stats(d)) {}

  const Drawing& drawing() const { return d_; }
  const DrawingStats& stats() const { return stats_; }
  int count(CellKind k) const { return stats_.count(k); }

  bool non_homotopic() { return cached(non_homotopic_, [&] { return is_non_homotopic(d_); }); }
  bool simple() { return cached(simple_, [&] { return is_simple(d_); }); }
  bool quasiplanar() { return cached(quasiplanar_, [&] { return is_quasiplanar(d_); }); }
  bool fan_crossing() { return cached(fan_, [&] { return is_fan_crossing(d_); }); }
  bool filled() { return cached(filled_, [&] { return is_filled(d_); }); }
  bool bipartite() { return cached(bipartite_, [&] { return drawkit::bipartition(d_).bipartite; }); }

  int max_crossings_per_edge() const {
    int best = 0;
    for (int c : crossings_per_edge(d_)) best = std::max(best, c);
    return best;
  }
  int min_degree() const {
    return stats_.degrees.empty() ? 0 : *std::min_element(stats_.degrees.begin(), stats_.degrees.end());
  }
  long long excess() const {
    long long sum = 0;
    for (const Cell& c : d_.cells) {
      if (c.size >= 5) sum += c.size - 5;
    }
    return sum;
  }

 private:
  static bool cached(std::optional<bool>& slot, const std::function<bool()>& f) {
    if (!slot) slot = f();
    return *slot;
  }

  const Drawing& d_;
  DrawingStats stats_;
  std::optional<bool> non_homotopic_, simple_, quasiplanar_, fan_, filled_, bipartite_;
};

void pre(InequalityReport& r, const std::string& name, bool holds) { r.preconditions.push_back({name, holds}); }

void rel(InequalityReport& r, const std::string& label, const Rational& lhs, const std::string& op,
         const Rational& rhs) {
  Relation x;
  x.label = label;
  x.lhs = lhs;
  x.rhs = rhs;
  x.op = op;
  x.holds = op == "=" ? lhs == rhs : op == "<=" ? lhs <= rhs : lhs >= rhs;
  r.relations.push_back(std::move(x));
}

void finish(InequalityReport& r) {
  r.applicable = std::all_of(r.preconditions.begin(), r.preconditions.end(), [](const auto& p) { return p.holds; });
  r.holds = std::all_of(r.relations.begin(), r.relations.end(),
                        [](const Relation& x) { return !x.applicable || x.holds; });
}

std::string show(const Rational& x) { return to_string(x); }

void connected_pre(InequalityReport& r) { pre(r, "connected", true); }

void at_least_vertices(InequalityReport& r, const Drawing& d, int n) {
  pre(r, "at least " + std::to_string(n) + " vertices", d.vertex_count() >= n);
}

void check_link(InequalityReport& r, Facts& f, int vertex) {
  const Drawing& d = f.drawing();
  connected_pre(r);
  at_least_vertices(r, d, 3);
  pre(r, "non-homotopic", f.non_homotopic());
  if (vertex >= d.vertex_count()) throw Error(ErrorKind::UnknownReference, "no such vertex");
  if (d.vertex_count() < 3 || !f.non_homotopic()) return;

  std::vector<int> targets;
  if (vertex >= 0) {
    targets.push_back(vertex);
  } else {
    for (int v = 0; v < d.vertex_count(); ++v) targets.push_back(v);
  }
  int skipped = 0;
  for (int v : targets) {
    const std::string label = "link(" + d.vertex_ids[v] + ")";
    try {
      const LinkResult link = link_of_vertex(d, v);
      rel(r, label, link.link_size, "=", Rational(link.predicted_size));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionFailed) throw;
      Relation x;
      x.label = label;
      x.op = "=";
      x.applicable = false;
      r.relations.push_back(std::move(x));
      ++skipped;
      r.notes.push_back(label + " skipped: " + e.what());
    }
  }
  if (vertex >= 0) pre(r, "vertex meets pairwise distinct cells", skipped == 0);
}

void add_bound(InequalityReport& r, Facts& f, const BoundTarget& target, const std::optional<RacCertificate>& rac) {
  const Drawing& d = f.drawing();
  const int n = d.vertex_count();
  r.id = std::string("BOUND(") + class_name(target.cls);
  if (target.cls == DrawingClass::quasiplanar) r.id += std::string(", ") + variant_name(target.variant);
  if (target.cls == DrawingClass::real_face && target.k) r.id += ", k=" + std::to_string(*target.k);
  r.id += ")";

  int minimum = 3;
  if (target.cls == DrawingClass::quasiplanar && target.variant == Variant::simple) minimum = 4;
  connected_pre(r);
  at_least_vertices(r, d, minimum);

  auto rac_pre = [&](int k) {
    pre(r, "RAC certificate with right-angle crossings", rac && rac->right_angles);
    pre(r, "at most " + std::to_string(k) + " bends per edge", rac && rac->max_bends <= k);
  };
  switch (target.cls) {
    case DrawingClass::rac0:
      rac_pre(0);
      break;
    case DrawingClass::rac1:
      rac_pre(1);
      pre(r, "non-homotopic", f.non_homotopic());
      break;
    case DrawingClass::rac2:
      rac_pre(2);
      pre(r, "non-homotopic", f.non_homotopic());
      break;
    case DrawingClass::fan_crossing:
      pre(r, "simple", f.simple());
      pre(r, "fan-crossing", f.fan_crossing());
      break;
    case DrawingClass::bipartite_fan_crossing:
      pre(r, "simple", f.simple());
      pre(r, "fan-crossing", f.fan_crossing());
      pre(r, "bipartite", f.bipartite());
      break;
    case DrawingClass::quasiplanar:
      if (target.variant == Variant::simple) {
        pre(r, "simple", f.simple());
      } else {
        pre(r, "non-homotopic", f.non_homotopic());
      }
      pre(r, "quasiplanar", f.quasiplanar());
      break;
    case DrawingClass::real_face: {
      const int k = target.k.value_or(0);
      if (k < 3) pre(r, "non-homotopic", f.non_homotopic());
      pre(r, "every cell meets at least " + std::to_string(k) + " vertex incidences", is_k_plus_real_face(d, k));
      break;
    }
    case DrawingClass::one_planar:
      pre(r, "non-homotopic", f.non_homotopic());
      pre(r, "1-planar", f.max_crossings_per_edge() <= 1);
      break;
    case DrawingClass::two_planar:
      pre(r, "non-homotopic", f.non_homotopic());
      pre(r, "2-planar", f.max_crossings_per_edge() <= 2);
      break;
  }
  if (n < minimum) {
    finish(r);
    return;
  }
  const Rational bound = max_edges(target.cls, target.variant, n, target.k);
  rel(r, "|E| <= bound", d.edge_count(), "<=", bound);
  finish(r);
  if (!r.applicable || d.edge_count() != bound) return;

  r.tight = true;
  r.notes.push_back("tight example: |E| = " + show(bound));
  const DensityEvaluation five = density_formula(d, 5);
  if (target.cls == DrawingClass::real_face && target.k && *target.k >= 3) {
    const int k = *target.k;
    const bool all_match = std::all_of(d.cells.begin(), d.cells.end(), [&](const Cell& c) { return c.size == 2 * k; });
    r.notes.push_back("crossings vanish: " + std::string(d.crossing_count() == 0 ? "yes" : "no"));
    r.notes.push_back("every cell has size " + std::to_string(2 * k) + ": " + (all_match ? "yes" : "no"));
  } else {
    r.notes.push_back("crossings = " + std::to_string(d.crossing_count()));
    r.notes.push_back("size-3 cells = " + std::to_string(five.c3) + ", size-4 cells = " + std::to_string(five.c4));
    r.notes.push_back("excess over size 5 = " + std::to_string(five.excess));
  }
}

InequalityReport evaluate(Facts& f, CatalogId id, const InequalityParams& params) {
  const Drawing& d = f.drawing();
  const DrawingStats& s = f.stats();
  InequalityReport r;
  r.id = catalog_name(id);
  const int tri = f.count(CellKind::TRI3), a4 = f.count(CellKind::A4), q4 = f.count(CellKind::Q4);
  const Rational V = d.vertex_count(), E = d.edge_count(), X = d.crossing_count();
  const Rational Ex = s.crossed_edges, Sin = s.inner_segments;
  int c3 = 0, c4 = 0;
  for (const Cell& c : d.cells) {
    if (c.size == 3) ++c3;
    if (c.size == 4) ++c4;
  }
  const Rational excess = Rational(f.excess());

  switch (id) {
    case CatalogId::OBS1:
      rel(r, "|S| = 2|X| + |E|", s.segments, "=", 2 * X + E);
      rel(r, "|S_in| = 2|X| - |E_x|", Sin, "=", 2 * X - Ex);
      break;
    case CatalogId::LEM_4N8:
      connected_pre(r);
      at_least_vertices(r, d, 3);
      pre(r, "non-homotopic", f.non_homotopic());
      for (CellKind k : {CellKind::TRI3, CellKind::Q4, CellKind::P5, CellKind::A4, CellKind::W5}) {
        pre(r, std::string("no ") + cell_kind_name(k) + " cells", f.count(k) == 0);
      }
      rel(r, "|E| <= 4|V| - 8", E, "<=", 4 * V - 8);
      break;
    case CatalogId::A_LE_X:
      pre(r, "non-homotopic", f.non_homotopic());
      rel(r, "#A4 <= |X|", a4, "<=", X);
      break;
    case CatalogId::B_GEN:
      connected_pre(r);
      at_least_vertices(r, d, 3);
      pre(r, "non-homotopic", f.non_homotopic());
      rel(r, "|S_in| >= #A4 + 2#Q4 + 3#TRI3", Sin, ">=", Rational(a4 + 2 * q4 + 3 * tri));
      rel(r, "|S_in| + #A4 >= 2|C4| + 3|C3|", Sin + a4, ">=", Rational(2 * c4 + 3 * c3));
      break;
    case CatalogId::LINK:
      check_link(r, f, params.vertex);
      break;
    case CatalogId::RAC_K: {
      const int k = params.k;
      r.id += "(" + std::to_string(k) + ")";
      connected_pre(r);
      pre(r, "k is 1 or 2", k == 1 || k == 2);
      pre(r, "non-homotopic", f.non_homotopic());
      pre(r, "RAC certificate with right-angle crossings", params.rac && params.rac->right_angles);
      pre(r, "crossed edges have at most k bends", params.rac && params.rac->max_bends_on_crossed_edges <= k);
      rel(r, "2|C3| + |C4| <= |X| + (k-1)/2 (|E_x| + 1)", Rational(2 * c3 + c4), "<=",
          X + Rational(k - 1, 2) * (Ex + 1));
      break;
    }
    case CatalogId::FC_C4:
    case CatalogId::FC_THM:
      connected_pre(r);
      at_least_vertices(r, d, 3);
      pre(r, "simple", f.simple());
      pre(r, "fan-crossing", f.fan_crossing());
      if (id == CatalogId::FC_C4) {
        rel(r, "|C4| <= |X|", c4, "<=", X);
      } else {
        rel(r, "|E| <= 5|V| - 10 - excess", E, "<=", 5 * V - 10 - excess);
      }
      break;
    case CatalogId::BIP_FC:
      connected_pre(r);
      at_least_vertices(r, d, 3);
      pre(r, "simple", f.simple());
      pre(r, "fan-crossing", f.fan_crossing());
      pre(r, "bipartite", f.bipartite());
      rel(r, "|V| <= excess", V, "<=", excess);
      rel(r, "|E| <= 4|V| - 10", E, "<=", 4 * V - 10);
      break;
    case CatalogId::QP_NOHOM:
      connected_pre(r);
      at_least_vertices(r, d, 3);
      pre(r, "non-homotopic", f.non_homotopic());
      pre(r, "filled", f.filled());
      pre(r, "every cell meets at most 2 distinct vertices", max_distinct_vertices_per_cell(d) <= 2);
      rel(r, "#A4 <= 2|E_x| - 2|V| + 2 excess", a4, "<=", 2 * Ex - 2 * V + 2 * excess);
      break;
    case CatalogId::QP_SIMPLE:
      connected_pre(r);
      pre(r, "filled", f.filled());
      pre(r, "simple", f.simple());
      pre(r, "quasiplanar", f.quasiplanar());
      pre(r, "minimum degree at least 4", f.min_degree() >= 4);
      rel(r, "#A4 - |E_x| <= |E| + 2 excess - 3.5|V|", a4 - Ex, "<=", E + 2 * excess - Rational(7, 2) * V);
      break;
    case CatalogId::TWO_PLANAR:
      connected_pre(r);
      pre(r, "non-homotopic", f.non_homotopic());
      pre(r, "2-planar", f.max_crossings_per_edge() <= 2);
      rel(r, "3#TRI3 + 2#Q4 + #A4 <= |X|", Rational(3 * tri + 2 * q4 + a4), "<=", X);
      break;
    case CatalogId::BOUND:
      add_bound(r, f, params.bound, params.rac);
      return r;
  }
  finish(r);
  return r;
}

std::vector<BoundTarget> all_bound_targets(int max_real_face_k) {
  std::vector<BoundTarget> out;
  for (DrawingClass c : {DrawingClass::rac0, DrawingClass::rac1, DrawingClass::rac2, DrawingClass::fan_crossing,
                         DrawingClass::bipartite_fan_crossing, DrawingClass::one_planar, DrawingClass::two_planar}) {
    out.push_back({c, Variant::unconstrained, std::nullopt});
  }
  out.push_back({DrawingClass::quasiplanar, Variant::non_homotopic, std::nullopt});
  out.push_back({DrawingClass::quasiplanar, Variant::simple, std::nullopt});
  for (int k = 1; k <= max_real_face_k; ++k) out.push_back({DrawingClass::real_face, Variant::unconstrained, k});
  return out;
}

}  // namespace

InequalityReport verify_inequality(const Drawing& d, CatalogId id, const InequalityParams& params) {
  Facts facts(d);
  return evaluate(facts, id, params);
}

std::vector<InequalityReport> verify_catalog(const Drawing& d, const std::optional<RacCertificate>& rac) {
  Facts facts(d);
  std::vector<InequalityReport> out;
  InequalityParams params;
  params.rac = rac;
  for (CatalogId id : all_catalog_ids()) {
    if (id == CatalogId::BOUND) continue;
    if (id == CatalogId::RAC_K) {
      for (int k : {1, 2}) {
        params.k = k;
        out.push_back(evaluate(facts, id, params));
      }
      continue;
    }
    out.push_back(evaluate(facts, id, params));
  }
  // Real-face levels above the drawing's own level never apply.
  const int level = std::max(1, real_face_level(d));
  for (const BoundTarget& target : all_bound_targets(level)) {
    params.bound = target;
    InequalityReport r = evaluate(facts, CatalogId::BOUND, params);
    if (r.applicable) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace drawkit
