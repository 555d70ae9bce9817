// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <set>
#include <string>
#include <vector>

#include "drawkit/classes.hpp"
#include "drawkit/density.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/generators.hpp"
#include "drawkit/properties.hpp"
#include "support.hpp"

using namespace drawkit;
using namespace drawkit::testing;
namespace fs = std::filesystem;

namespace {

struct Item {
  std::string name;
  Drawing drawing;
  std::optional<RacCertificate> rac;
};

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  int notes = 0;

  void fail(const std::string& why) {
    pass = false;
    if (notes++ < 6) detail << "\n    " << why;
  }
};

struct Fuzzed {
  std::uint64_t seed;
  GeomDrawing geometry;
  Drawing plane;
  Drawing sphere;
};

std::vector<Fuzzed> fuzz_corpus(int count) {
  std::vector<Fuzzed> out;
  for (int seed = 1; seed <= count; ++seed) {
    const int n = 3 + seed % 8;
    const double p = 0.25 + 0.05 * (seed % 8);
    GeomDrawing g = random_geom_drawing(seed, n, p, seed % 3);
    Drawing plane = to_combinatorial(g, Surface::plane);
    Drawing sphere = to_combinatorial(g, Surface::sphere);
    out.push_back({static_cast<std::uint64_t>(seed), std::move(g), std::move(plane), std::move(sphere)});
  }
  return out;
}

std::vector<Item> fixture_items() {
  std::vector<Item> out;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(DRAWKIT_FIXTURES)) paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    const std::string name = path.filename().string();
    try {
      if (path.extension() == ".drw") {
        out.push_back({name, read_drw_file(path.string()), std::nullopt});
      } else if (path.extension() == ".geo") {
        const GeomDrawing g = read_geo_file(path.string());
        out.push_back({name, to_combinatorial(g, Surface::plane), rac_certificate(g)});
      }
    } catch (const Error&) {
      // deliberately invalid fixtures
    }
  }
  return out;
}

std::vector<Item> generator_items() {
  std::vector<Item> out;
  for (int n = 4; n <= 25; ++n) out.push_back({"quasi8 n=" + std::to_string(n), gen_quasiplanar_nonhomotopic(n), {}});
  for (int n = 8; n <= 24; n += 2) {
    try {
      out.push_back({"quasi65 n=" + std::to_string(n), gen_quasiplanar_simple(n), {}});
    } catch (const Error&) {
      // reported under criterion 2
    }
  }
  for (int n = 8; n <= 24; n += 2) out.push_back({"oneplanar n=" + std::to_string(n), gen_one_planar_tight(n), {}});
  return out;
}

// fill and eliminate_t_cells images of every input meeting their preconditions.
std::vector<Item> surgery_items(const std::vector<Item>& inputs) {
  std::vector<Item> out;
  for (const Item& it : inputs) {
    const Drawing& d = it.drawing;
    if (!is_non_homotopic(d) || !is_quasiplanar(d)) continue;
    Drawing f = fill(d);
    if (f.vertex_count() >= 4) out.push_back({"eliminate(fill(" + it.name + "))", eliminate_t_cells(f), {}});
    out.push_back({"fill(" + it.name + ")", std::move(f), {}});
  }
  return out;
}

int outer_segments_of_crossed_edges(const Drawing& d, const Cell& c) {
  const Planarization& p = d.planarization;
  int count = 0;
  for (int dart : c.darts) {
    const Segment& s = p.segments[Planarization::segment_of(dart)];
    const auto crossings = static_cast<int>(d.edges[s.edge].crossings.size());
    if (crossings > 0 && (s.index == 0 || s.index == crossings)) ++count;
  }
  return count;
}

void report(int id, const std::string& title, const Verdict& v, double seconds, bool& all) {
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed
            << std::setprecision(1) << seconds << " s)" << v.detail.str() << std::endl;
  all = all && v.pass;
}

template <class F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  bool all = true;
  const std::vector<Item> fixtures = fixture_items();
  std::vector<Fuzzed> fuzz;
  std::vector<Item> generated;

  {
    Verdict v;
    long long evaluations = 0;
    const double s = timed([&] {
      fuzz = fuzz_corpus(200);
      std::vector<Rational> ts{1, 2, 3, 4, 5, 6};
      for (int k = 3; k <= 6; ++k) ts.push_back(Rational(2 * k, 2 * k - 4));
      auto check = [&](const std::string& name, const Drawing& d) {
        for (const Rational& t : ts) {
          ++evaluations;
          const Rational res = density_formula(d, t).residual;
          if (res != 0) v.fail(name + " t=" + to_string(t) + " residual " + to_string(res));
        }
      };
      for (const Item& it : fixtures) check(it.name, it.drawing);
      for (const Fuzzed& f : fuzz) {
        check("seed " + std::to_string(f.seed) + " plane", f.plane);
        check("seed " + std::to_string(f.seed) + " sphere", f.sphere);
      }
    });
    if (s >= 30) v.fail("took longer than 30 s");
    v.detail << "\n    " << evaluations << " exact evaluations";
    report(1, "density identity residual is exactly 0", v, s, all);
  }

  {
    Verdict v;
    const double s = timed([&] {
      for (int n = 4; n <= 25; ++n) {
        const Drawing d = gen_quasiplanar_nonhomotopic(n);
        if (d.edge_count() != 8 * n - 20 || !is_quasiplanar(d) || !is_non_homotopic(d)) {
          v.fail("quasi8 n=" + std::to_string(n) + " has " + std::to_string(d.edge_count()) + " edges or fails a check");
        }
      }
      for (int n = 8; n <= 24; n += 2) {
        try {
          const Drawing d = gen_quasiplanar_simple(n);
          if (2 * d.edge_count() != 13 * n - 40 || !is_simple(d) || !is_quasiplanar(d)) {
            v.fail("quasi65 n=" + std::to_string(n) + " wrong count or fails a check");
          }
        } catch (const Error& e) {
          v.fail("quasi65 n=" + std::to_string(n) + ": " + e.what());
        }
      }
      for (int n = 8; n <= 24; n += 2) {
        const Drawing d = gen_one_planar_tight(n);
        InequalityParams p;
        p.bound = {DrawingClass::one_planar, Variant::unconstrained, std::nullopt};
        const InequalityReport r = verify_inequality(d, CatalogId::BOUND, p);
        if (d.edge_count() != 4 * n - 8 || !is_k_planar(d, 1) || !is_non_homotopic(d) || !r.holds || !r.tight) {
          v.fail("oneplanar n=" + std::to_string(n) + " wrong count, check, or bound not tight");
        }
      }
    });
    if (s >= 60) v.fail("took longer than 60 s");
    generated = generator_items();
    report(2, "tight generators hit 8n-20, 6.5n-20 and 4n-8", v, s, all);
  }

  std::vector<Item> corpus = fixtures;
  for (const Fuzzed& f : fuzz) {
    corpus.push_back({"seed " + std::to_string(f.seed) + " plane", f.plane, rac_certificate(f.geometry)});
    corpus.push_back({"seed " + std::to_string(f.seed) + " sphere", f.sphere, rac_certificate(f.geometry)});
  }
  corpus.insert(corpus.end(), generated.begin(), generated.end());
  {
    std::vector<Item> images = surgery_items(corpus);
    corpus.insert(corpus.end(), std::make_move_iterator(images.begin()), std::make_move_iterator(images.end()));
  }

  {
    Verdict v;
    long long applied = 0;
    const double s = timed([&] {
      for (const Item& it : corpus) {
        for (const InequalityReport& r : verify_catalog(it.drawing, it.rac)) {
          if (r.id == "LINK" || r.id.rfind("RAC_K", 0) == 0 || !r.applicable) continue;
          ++applied;
          if (!r.holds) v.fail(it.name + ": " + r.id + " violated");
        }
      }
    });
    v.detail << "\n    " << corpus.size() << " drawings, " << applied << " applicable entries";
    report(3, "inequality catalog holds wherever its preconditions do", v, s, all);
  }

  {
    Verdict v;
    long long checked = 0, mismatched = 0, unevaluable = 0;
    const double s = timed([&] {
      for (const Item& it : corpus) {
        const Drawing& d = it.drawing;
        if (d.vertex_count() < 3 || !is_non_homotopic(d)) continue;
        for (int u = 0; u < d.vertex_count(); ++u) {
          ++checked;
          try {
            const LinkResult r = link_of_vertex(d, u);
            if (r.link_size != r.predicted_size) {
              ++mismatched;
              v.fail(it.name + " vertex " + d.vertex_ids[u] + ": link " + std::to_string(r.link_size) + ", predicted " +
                     std::to_string(r.predicted_size));
            }
          } catch (const Error& e) {
            ++unevaluable;
            v.fail(it.name + " vertex " + d.vertex_ids[u] + ": " + e.what());
          }
        }
      }
    });
    v.detail << "\n    " << checked << " vertices, " << mismatched << " mismatches, " << unevaluable
             << " where the removal is not a single merged cell";
    report(4, "link identity at every vertex", v, s, all);
  }

  {
    Verdict v;
    long long cells = 0;
    const double s = timed([&] {
      for (const Item& it : corpus) {
        const Drawing& d = it.drawing;
        if (d.vertex_count() < 3 || !is_non_homotopic(d)) continue;
        for (const Cell& c : d.cells) {
          if (c.size < 3 || c.size > 5) continue;
          ++cells;
          const CellKind k = c.cls.kind;
          const bool ok = (c.size == 3 && k == CellKind::TRI3) ||
                          (c.size == 4 && (k == CellKind::A4 || k == CellKind::Q4)) ||
                          (c.size == 5 && (k == CellKind::D5 || k == CellKind::W5 || k == CellKind::P5));
          if (!ok) v.fail(it.name + " cell " + std::to_string(c.id) + " tagged " + to_string(c.cls));
        }
      }
    });
    v.detail << "\n    " << cells << " cells of size 3 to 5";
    report(5, "small cells classify completely", v, s, all);
  }

  {
    Verdict v;
    const double s = timed([&] {
      for (const Fuzzed& f : fuzz) {
        std::vector<int> oracle, pipeline;
        for (const auto& [a, b] : geometric_cells(f.geometry)) oracle.push_back(a + b);
        for (const Cell& c : f.plane.cells) pipeline.push_back(c.size);
        std::sort(oracle.begin(), oracle.end());
        std::sort(pipeline.begin(), pipeline.end());
        if (oracle != pipeline) v.fail("seed " + std::to_string(f.seed) + " cell sizes differ");
      }
    });
    v.detail << "\n    " << fuzz.size() << " geometric drawings";
    report(6, "geometric oracle matches the combinatorial cells", v, s, all);
  }

  {
    Verdict v;
    struct Expect {
      const char* name;
      int min_bends;  // smallest k with is_rac, or -1 when none up to 2
    };
    const Expect fixtures7[] = {{"k4.geo", 0},         {"rac0_grid.geo", 0},    {"rac0_skew.geo", 0},
                                {"rac1_orth.geo", 1},  {"rac1_hook.geo", 1},    {"rac2_zigzag.geo", 2},
                                {"rac2_stairs.geo", 2}, {"rect_k4.geo", -1}};
    const double s = timed([&] {
      for (const Expect& x : fixtures7) {
        const GeomDrawing g = load_geo(x.name);
        const Drawing d = to_combinatorial(g, Surface::plane);
        for (int k = 0; k <= 2; ++k) {
          const bool want = x.min_bends >= 0 && k >= x.min_bends;
          if (is_rac(g, k).rac != want) v.fail(std::string(x.name) + " is_rac k=" + std::to_string(k) + " wrong");
        }
        if (x.min_bends == 0) {
          for (const Cell& c : d.cells) {
            const CellKind k = c.cls.kind;
            if (k == CellKind::TRI3 || k == CellKind::A4 || k == CellKind::P5) {
              v.fail(std::string(x.name) + " has a " + to_string(c.cls) + " cell");
            }
            if ((k == CellKind::D5 || k == CellKind::W5) && outer_segments_of_crossed_edges(d, c) != 2) {
              v.fail(std::string(x.name) + " cell " + std::to_string(c.id) + " lacks two outer crossed segments");
            }
          }
        }
        if (x.min_bends >= 0) {
          for (int k : {1, 2}) {
            InequalityParams p;
            p.k = k;
            p.rac = rac_certificate(g);
            const InequalityReport r = verify_inequality(d, CatalogId::RAC_K, p);
            if (k >= x.min_bends && !r.applicable) v.fail(std::string(x.name) + " RAC_K k=" + std::to_string(k) + " not applicable");
            if (r.applicable && !r.holds) v.fail(std::string(x.name) + " RAC_K k=" + std::to_string(k) + " violated");
          }
        }
      }
    });
    report(7, "RAC recognition and cell properties", v, s, all);
  }

  {
    Verdict v;
    long long fills = 0, simple_fills = 0, simple_skipped = 0, eliminations = 0;
    auto covers = [](const Drawing& after, const Drawing& before) {
      auto key = [](const Drawing& d, const Edge& e) {
        return std::minmax(d.vertex_ids[e.source], d.vertex_ids[e.target]);
      };
      std::set<std::pair<std::string, std::string>> sa, sb;
      for (const Edge& e : after.edges) sa.insert(key(after, e));
      for (const Edge& e : before.edges) sb.insert(key(before, e));
      return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()) && after.edge_count() >= before.edge_count();
    };
    const double s = timed([&] {
      for (const Item& it : corpus) {
        const Drawing& d = it.drawing;
        if (is_non_homotopic(d) && is_quasiplanar(d)) {
          ++fills;
          const Drawing f = fill(d);
          if (!is_filled(f) || !is_non_homotopic(f) || !is_quasiplanar(f)) v.fail("fill(" + it.name + ") postcondition");
          if (!covers(f, d)) v.fail("fill(" + it.name + ") lost an edge");
          if (!fill(f).same_embedding(f)) v.fail("fill(" + it.name + ") not idempotent");

          if (f.vertex_count() >= 4) {
            ++eliminations;
            const Drawing e = eliminate_t_cells(f);
            if (compute_stats(e).count(CellKind::T6) > 0) v.fail("eliminate(" + it.name + ") left a T6 cell");
            if (!is_filled(e) || !is_non_homotopic(e) || !is_quasiplanar(e)) v.fail("eliminate(" + it.name + ") class lost");
            if (!covers(e, f)) v.fail("eliminate(" + it.name + ") lost an edge");
            if (!eliminate_t_cells(e).same_embedding(e)) v.fail("eliminate(" + it.name + ") not idempotent");
          }
        }
        if (is_simple(d) && is_quasiplanar(d)) {
          try {
            const Drawing f = fill_simple(d);
            ++simple_fills;
            if (!is_filled(f) || !is_simple(f) || !is_quasiplanar(f)) v.fail("fill_simple(" + it.name + ") postcondition");
            if (!covers(f, d)) v.fail("fill_simple(" + it.name + ") lost an adjacency");
            if (!fill_simple(f).same_embedding(f)) v.fail("fill_simple(" + it.name + ") not idempotent");
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::PreconditionFailed) v.fail("fill_simple(" + it.name + "): " + e.what());
            ++simple_skipped;
          }
        }
      }
    });
    v.detail << "\n    " << fills << " fills, " << eliminations << " eliminations, " << simple_fills
             << " simple fills (" << simple_skipped << " inputs not 3-connected)";
    report(8, "surgery postconditions and idempotence", v, s, all);
  }

  return all ? 0 : 1;
}
