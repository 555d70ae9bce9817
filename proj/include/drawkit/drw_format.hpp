#pragma once

#include <string>
#include <string_view>

#include "drawkit/drawing.hpp"

namespace drawkit {

// Line-oriented text format; errors carry line and column.
DrawingSpec parse_drw(std::string_view text);
std::string serialize_drw(const Drawing& d);

Drawing read_drw_file(const std::string& path);
void write_drw_file(const Drawing& d, const std::string& path);

}  // namespace drawkit
