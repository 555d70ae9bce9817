#pragma once

#include <string>
#include <string_view>

#include "drawkit/geometry.hpp"

namespace drawkit {

// vertex <id> <x> <y>
// edge <id> <u> <v> [via <x> <y> ...]
GeomDrawing parse_geo(std::string_view text);
std::string serialize_geo(const GeomDrawing& g);

GeomDrawing read_geo_file(const std::string& path);
void write_geo_file(const GeomDrawing& g, const std::string& path);

}  // namespace drawkit
