#include <random>

#include "drawkit/errors.hpp"
#include "drawkit/geometry.hpp"

namespace drawkit {

namespace {

constexpr int kGrid = 1000;
constexpr int kAttempts = 2000;

}  // namespace

GeomDrawing random_geom_drawing(std::uint64_t seed, int n, double edge_probability, int bend_budget) {
  if (n < 2) throw Error(ErrorKind::PreconditionFailed, "random drawings need at least two vertices");
  if (edge_probability <= 0 || edge_probability > 1) {
    throw Error(ErrorKind::PreconditionFailed, "edge probability must lie in (0, 1]");
  }
  if (bend_budget < 0) throw Error(ErrorKind::PreconditionFailed, "bend budget must be non-negative");

  std::mt19937_64 rng(seed);
  auto coord = [&] { return Rational(static_cast<long long>(rng() % kGrid)); };
  const auto threshold = static_cast<std::uint64_t>(edge_probability * 1000000.0);

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    GeomDrawing g;
    for (int v = 0; v < n; ++v) {
      g.vertex_ids.push_back("v" + std::to_string(v));
      g.points.push_back({coord(), coord()});
    }
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 1000000 >= threshold) continue;
        GeomEdge e;
        e.id = "e" + std::to_string(g.edges.size());
        e.source = u;
        e.target = v;
        const int bends = static_cast<int>(rng() % static_cast<std::uint64_t>(bend_budget + 1));
        for (int b = 0; b < bends; ++b) e.bends.push_back({coord(), coord()});
        g.edges.push_back(std::move(e));
      }
    }
    if (g.edges.empty()) continue;
    try {
      to_combinatorial(g, Surface::sphere);
      return g;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DegenerateContact && err.kind() != ErrorKind::DisconnectedPlanarization) throw;
    }
  }
  throw Error(ErrorKind::GenerationFailed, "no valid random drawing after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace drawkit
