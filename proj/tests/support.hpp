#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drawkit/drw_format.hpp"
#include "drawkit/geo_format.hpp"
#include "drawkit/geometry.hpp"

namespace drawkit::testing {

inline std::string fixture(const std::string& name) { return std::string(DRAWKIT_FIXTURES) + "/" + name; }

inline Drawing load_drw(const std::string& name) { return read_drw_file(fixture(name)); }
inline GeomDrawing load_geo(const std::string& name) { return read_geo_file(fixture(name)); }

inline Drawing from_text(const std::string& text) { return build_drawing(parse_drw(text)); }

struct FuzzCase {
  std::uint64_t seed = 0;
  GeomDrawing geometry;
  Drawing drawing;
};

// Seeded random drawings with n <= 10 and at most two bends, alternating surfaces.
inline std::vector<FuzzCase> fuzz_cases(std::uint64_t first, std::uint64_t count) {
  std::vector<FuzzCase> out;
  for (std::uint64_t seed = first; seed < first + count; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const double p = 0.25 + 0.05 * static_cast<double>(seed % 8);
    GeomDrawing g = random_geom_drawing(seed, n, p, static_cast<int>(seed % 3));
    Drawing d = to_combinatorial(g, seed % 2 ? Surface::plane : Surface::sphere);
    out.push_back({seed, std::move(g), std::move(d)});
  }
  return out;
}

}  // namespace drawkit::testing
