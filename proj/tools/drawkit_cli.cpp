#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drawkit/classes.hpp"
#include "drawkit/density.hpp"
#include "drawkit/drw_format.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/fuzz.hpp"
#include "drawkit/generators.hpp"
#include "drawkit/geo_format.hpp"
#include "drawkit/geometry.hpp"
#include "drawkit/report.hpp"

using namespace drawkit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

struct Loaded {
  Drawing drawing;
  std::optional<GeomDrawing> geometry;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Loaded load(const std::string& path) {
  if (ends_with(path, ".geo")) {
    GeomDrawing g = read_geo_file(path);
    Drawing d = to_combinatorial(g, Surface::plane);
    return {std::move(d), std::move(g)};
  }
  return {read_drw_file(path), std::nullopt};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

int cmd_check(const std::string& file, const CheckRequest& request, bool json) {
  const Loaded in = load(file);
  const auto outcomes = run_checks(in.drawing, in.geometry ? &*in.geometry : nullptr, request);
  const ClassReport classes = class_report(in.drawing);
  bool ok = true;
  for (const auto& c : outcomes) ok = ok && c.holds;
  if (json) {
    nlohmann::json j;
    j["file"] = file;
    j["drawing"] = drawing_json(in.drawing);
    j["classes"] = class_json(classes);
    j["checks"] = nlohmann::json::array();
    for (const auto& c : outcomes) j["checks"].push_back(check_json(c));
    j["pass"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << drawing_text(in.drawing) << class_text(classes);
    for (const auto& c : outcomes) std::cout << check_text(c);
    std::cout << (ok ? "result: pass" : "result: FAIL") << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_density(const std::string& file, const std::vector<std::string>& t_texts, bool lemmas, bool json) {
  const Loaded in = load(file);
  std::vector<Rational> ts;
  for (const auto& text : t_texts) {
    auto t = parse_rational(text);
    if (!t) throw Error(ErrorKind::Syntax, "bad rational '" + text + "' for --t");
    ts.push_back(*t);
  }
  if (ts.empty()) ts.push_back(5);

  bool ok = true;
  std::vector<DensityEvaluation> evals;
  for (const auto& t : ts) {
    evals.push_back(density_formula(in.drawing, t));
    ok = ok && evals.back().residual == 0;
  }
  std::vector<InequalityReport> reports;
  if (lemmas) {
    std::optional<RacCertificate> rac;
    if (in.geometry) rac = rac_certificate(*in.geometry);
    reports = verify_catalog(in.drawing, rac);
    for (const auto& r : reports) ok = ok && (!r.applicable || r.holds);
  }

  if (json) {
    nlohmann::json j;
    j["file"] = file;
    j["drawing"] = drawing_json(in.drawing);
    j["density"] = nlohmann::json::array();
    for (const auto& e : evals) j["density"].push_back(density_json(e));
    if (lemmas) {
      j["inequalities"] = nlohmann::json::array();
      for (const auto& r : reports) j["inequalities"].push_back(inequality_json(r));
    }
    j["pass"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << drawing_text(in.drawing);
    for (const auto& e : evals) std::cout << density_text(e);
    for (const auto& r : reports) {
      if (r.applicable) std::cout << inequality_text(r);
    }
    for (const auto& r : reports) {
      if (r.applicable && r.tight) std::cout << "tight example: " << r.id << "\n";
    }
  }
  return ok ? kPass : kFail;
}

int cmd_generate(const std::string& family, int n, const std::string& out) {
  Drawing d;
  if (family == "quasi8") {
    d = gen_quasiplanar_nonhomotopic(n);
  } else if (family == "quasi65") {
    d = gen_quasiplanar_simple(n);
  } else if (family == "oneplanar") {
    d = gen_one_planar_tight(n);
  } else {
    throw Error(ErrorKind::UnknownClass, "unknown family '" + family + "'");
  }
  write_drw_file(d, out);
  std::cout << family << " n=" << n << ": " << d.vertex_count() << " vertices, " << d.edge_count() << " edges, "
            << d.crossing_count() << " crossings -> " << out << "\n";
  return kPass;
}

int cmd_export(const std::string& file, const std::string& svg) {
  const Loaded in = load(file);
  write_text(svg, export_svg(in.drawing));
  std::cout << in.drawing.cells.size() << " cells drawn -> " << svg << "\n";
  return kPass;
}

int cmd_fuzz(const std::string& seeds, int n, int bends, int threads, const std::string& report) {
  FuzzOptions o;
  const auto dots = seeds.find("..");
  try {
    if (dots == std::string::npos) {
      o.first_seed = o.last_seed = std::stoull(seeds);
    } else {
      o.first_seed = std::stoull(seeds.substr(0, dots));
      o.last_seed = std::stoull(seeds.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw Error(ErrorKind::Syntax, "bad seed range '" + seeds + "', expected a..b");
  }
  if (n < 2) throw Error(ErrorKind::NTooSmall, "--n must be at least 2");
  o.n = n;
  o.max_bends = bends;
  o.threads = threads;
  const FuzzSummary s = run_fuzz(o);
  const std::string text = s.text();
  if (!report.empty()) write_text(report, text);
  std::cout << text;
  return s.violations() == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"drawkit: check, measure and generate topological drawings"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;

  CheckRequest request;
  std::string cls;
  int k = 0;
  auto* check = app.add_subcommand("check", "validate a drawing and run class predicates");
  check->add_option("file", file, ".drw or .geo file")->required();
  auto* cls_opt = check->add_option("--class", cls, "class to test, e.g. quasiplanar, 1-planar, real-face, rac1");
  auto* k_opt = check->add_option("--k", k, "k for real-face or k-planar");
  check->add_flag("--simple", request.simple, "require a simple drawing");
  check->add_flag("--non-homotopic", request.non_homotopic, "require no empty lens");
  check->add_flag("--json", json, "structured output");

  std::vector<std::string> ts;
  bool lemmas = false;
  auto* density = app.add_subcommand("density", "evaluate the density formula and the inequality catalog");
  density->add_option("file", file, ".drw or .geo file")->required();
  density->add_option("--t", ts, "parameter t, an exact rational (repeatable)");
  density->add_flag("--lemmas", lemmas, "verify every catalog entry");
  density->add_flag("--json", json, "structured output");

  std::string family, out;
  int n = 0;
  auto* generate = app.add_subcommand("generate", "write a tight example drawing");
  generate->add_option("family", family, "quasi8, quasi65 or oneplanar")->required();
  generate->add_option("--n", n, "number of vertices")->required();
  generate->add_option("-o,--output", out, "output .drw file")->required();

  std::string svg;
  auto* exp = app.add_subcommand("export", "draw the planarization as SVG");
  exp->add_option("file", file, ".drw or .geo file")->required();
  exp->add_option("--svg", svg, "output .svg file")->required();

  std::string seeds = "1..200", report;
  int fuzz_n = 8, bends = 2, threads = 0;
  auto* fuzz = app.add_subcommand("fuzz", "sweep invariants over seeded random drawings");
  fuzz->add_option("--seeds", seeds, "seed range a..b");
  fuzz->add_option("--n", fuzz_n, "vertices per drawing");
  fuzz->add_option("--bends", bends, "maximum bends per edge");
  fuzz->add_option("--threads", threads, "worker threads, 0 for all cores");
  fuzz->add_option("--report", report, "write the summary to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    if (*check) {
      if (*cls_opt) request.cls = cls;
      if (*k_opt) request.k = k;
      return cmd_check(file, request, json);
    }
    if (*density) return cmd_density(file, ts, lemmas, json);
    if (*generate) return cmd_generate(family, n, out);
    if (*exp) return cmd_export(file, svg);
    if (*fuzz) return cmd_fuzz(seeds, fuzz_n, bends, threads, report);
  } catch (const Error& e) {
    std::cerr << "error: ";
    if (e.line() > 0) std::cerr << "line " << e.line() << ", column " << e.column() << ": ";
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
