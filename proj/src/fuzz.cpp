#include "drawkit/fuzz.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "drawkit/density.hpp"
#include "drawkit/drw_format.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/geometry.hpp"
#include "drawkit/properties.hpp"

namespace drawkit {

namespace {

const std::vector<Rational>& density_parameters() {
  static const std::vector<Rational> ts{1, 2, 3, 4, 5, 6, Rational(6, 2), Rational(8, 4), Rational(10, 6),
                                        Rational(12, 8)};
  return ts;
}

constexpr std::size_t kMaxFailures = 20;

void note(FuzzSummary& s, const std::string& invariant, bool ok, const std::string& where, const std::string& what) {
  auto& t = s.invariants[invariant];
  ++t.checked;
  if (ok) return;
  ++t.violations;
  if (s.failures.size() < kMaxFailures) s.failures.push_back(where + ": " + invariant + ": " + what);
}

void check_drawing(FuzzSummary& s, const GeomDrawing& g, const Drawing& d, const std::string& where) {
  for (const Rational& t : density_parameters()) {
    const auto e = density_formula(d, t);
    note(s, "density residual", e.residual == 0, where, "t = " + to_string(t) + " residual " + to_string(e.residual));
  }

  std::vector<int> comb;
  for (const Cell& c : d.cells) comb.push_back(c.size);
  std::vector<int> geo;
  for (const auto& [vi, si] : geometric_cells(g)) geo.push_back(vi + si);
  std::sort(comb.begin(), comb.end());
  std::sort(geo.begin(), geo.end());
  note(s, "geometric cell oracle", comb == geo, where, "cell sizes differ");

  const Drawing again = build_drawing(parse_drw(serialize_drw(d)));
  note(s, "drw round trip", again.same_embedding(d), where, "embedding changed");

  for (const auto& r : verify_catalog(d, rac_certificate(g))) {
    if (r.id.rfind("LINK", 0) == 0) continue;
    if (!r.applicable) {
      ++s.invariants["catalog " + r.id].skipped;
      continue;
    }
    note(s, "catalog " + r.id, r.holds, where, "violated");
  }

  const bool eligible = d.vertex_count() >= 3 && is_non_homotopic(d);
  for (const Cell& c : d.cells) {
    if (c.size < 3 || c.size > 5) continue;
    if (!eligible) {
      ++s.invariants["small cell taxonomy"].skipped;
      continue;
    }
    note(s, "small cell taxonomy", c.cls.kind != CellKind::OTHER, where, "cell " + std::to_string(c.id) + " unclassified");
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!eligible) {
      ++s.invariants["link of vertex"].skipped;
      continue;
    }
    try {
      const auto link = link_of_vertex(d, v);
      note(s, "link of vertex", link.link_size == link.predicted_size, where,
           "vertex " + d.vertex_ids[v] + ": " + std::to_string(link.link_size) + " vs " +
               std::to_string(link.predicted_size));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionFailed) throw;
      ++s.invariants["link of vertex"].skipped;
    }
  }
}

FuzzSummary run_range(const FuzzOptions& o, std::uint64_t first, std::uint64_t last) {
  FuzzSummary s;
  for (std::uint64_t seed = first; seed <= last; ++seed) {
    const double p = 0.25 + 0.05 * static_cast<double>(seed % 8);
    const int bends = static_cast<int>(seed % static_cast<std::uint64_t>(o.max_bends + 1));
    const GeomDrawing g = random_geom_drawing(seed, o.n, p, bends);
    for (const Surface surface : {Surface::plane, Surface::sphere}) {
      const std::string where =
          "seed " + std::to_string(seed) + (surface == Surface::plane ? " plane" : " sphere");
      ++s.drawings;
      try {
        check_drawing(s, g, to_combinatorial(g, surface), where);
      } catch (const std::exception& e) {
        note(s, "no unexpected error", false, where, e.what());
      }
    }
  }
  return s;
}

void merge(FuzzSummary& into, const FuzzSummary& part) {
  into.drawings += part.drawings;
  for (const auto& [name, t] : part.invariants) {
    auto& dst = into.invariants[name];
    dst.checked += t.checked;
    dst.violations += t.violations;
    dst.skipped += t.skipped;
  }
  for (const auto& f : part.failures) {
    if (into.failures.size() < kMaxFailures) into.failures.push_back(f);
  }
}

}  // namespace

long long FuzzSummary::violations() const {
  long long total = 0;
  for (const auto& [name, t] : invariants) total += t.violations;
  return total;
}

std::string FuzzSummary::text() const {
  std::ostringstream out;
  out << "drawings: " << drawings << "\n";
  for (const auto& [name, t] : invariants) {
    out << name << ": checked " << t.checked << ", violations " << t.violations << ", skipped " << t.skipped << "\n";
  }
  for (const auto& f : failures) out << "failure: " << f << "\n";
  out << "violations: " << violations() << "\n";
  return out.str();
}

FuzzSummary run_fuzz(const FuzzOptions& o) {
  if (o.last_seed < o.first_seed) return {};
  const std::uint64_t count = o.last_seed - o.first_seed + 1;
  std::uint64_t workers = o.threads > 0 ? static_cast<std::uint64_t>(o.threads) : std::thread::hardware_concurrency();
  workers = std::clamp<std::uint64_t>(workers, 1, count);
  std::vector<std::future<FuzzSummary>> parts;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (std::uint64_t first = o.first_seed; first <= o.last_seed; first += chunk) {
    const std::uint64_t last = std::min(o.last_seed, first + chunk - 1);
    parts.push_back(std::async(std::launch::async, run_range, o, first, last));
  }
  FuzzSummary total;
  for (auto& part : parts) merge(total, part.get());
  return total;
}

}  // namespace drawkit
