#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "drawkit/report.hpp"

namespace drawkit {

namespace {

struct XY {
  double x = 0;
  double y = 0;
};

const char* cell_color(CellKind kind) {
  switch (kind) {
    case CellKind::TRI3: return "#f4cccc";
    case CellKind::A4: return "#fce5cd";
    case CellKind::Q4: return "#fff2cc";
    case CellKind::D5: return "#d9ead3";
    case CellKind::W5: return "#d0e0e3";
    case CellKind::P5: return "#cfe2f3";
    case CellKind::T6: return "#d9d2e9";
    default: return "#eeeeee";
  }
}

std::string escaped(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Outer cell nodes on a circle, every other node at the average of its
// neighbours.
std::vector<XY> tutte_layout(const Drawing& d, int outer, double centre, double radius) {
  const Planarization& p = d.planarization;
  std::vector<XY> pos(p.node_count, {centre, centre});
  std::vector<bool> fixed(p.node_count, false);
  std::vector<int> ring;
  if (outer >= 0) {
    for (int dart : d.cells[outer].darts) {
      const int node = p.origin(dart);
      if (!fixed[node]) {
        fixed[node] = true;
        ring.push_back(node);
      }
    }
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
    pos[ring[i]] = {centre + radius * std::cos(a), centre - radius * std::sin(a)};
  }
  std::vector<std::vector<int>> adj(p.node_count);
  for (const Segment& s : p.segments) {
    adj[s.tail].push_back(s.head);
    adj[s.head].push_back(s.tail);
  }
  for (int round = 0; round < 2000; ++round) {
    for (int node = 0; node < p.node_count; ++node) {
      if (fixed[node] || adj[node].empty()) continue;
      XY sum;
      for (int other : adj[node]) {
        sum.x += pos[other].x;
        sum.y += pos[other].y;
      }
      pos[node] = {sum.x / static_cast<double>(adj[node].size()), sum.y / static_cast<double>(adj[node].size())};
    }
  }
  return pos;
}

}  // namespace

std::string export_svg(const Drawing& d) {
  const double size = 600, centre = size / 2, radius = 260;
  int outer = -1;
  for (const Cell& c : d.cells) {
    if (c.unbounded) outer = c.id;
  }
  if (outer < 0) {
    for (const Cell& c : d.cells) {
      if (outer < 0 || c.darts.size() > d.cells[outer].darts.size()) outer = c.id;
    }
  }
  const auto pos = tutte_layout(d, outer, centre, radius);
  const Planarization& p = d.planarization;

  std::ostringstream out;
  out.precision(3);
  out << std::fixed;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  for (const Cell& c : d.cells) {
    out << "<path class=\"cell\" data-cell=\"" << c.id << "\" data-size=\"" << c.size << "\" fill=\""
        << cell_color(c.cls.kind) << "\"";
    if (c.id == outer) out << " fill-rule=\"evenodd\"";
    out << " d=\"";
    if (c.id == outer) out << "M0 0H" << size << "V" << size << "H0Z ";
    for (std::size_t i = 0; i < c.darts.size(); ++i) {
      const XY& q = pos[p.origin(c.darts[i])];
      out << (i == 0 ? "M" : "L") << q.x << " " << q.y << " ";
    }
    out << "Z\"><title>" << escaped(to_string(c.cls)) << "</title></path>\n";
  }
  for (const Segment& s : p.segments) {
    out << "<line class=\"segment\" x1=\"" << pos[s.tail].x << "\" y1=\"" << pos[s.tail].y << "\" x2=\""
        << pos[s.head].x << "\" y2=\"" << pos[s.head].y << "\" stroke=\"#333\" stroke-width=\"1.5\"><title>"
        << escaped(d.edges[s.edge].id) << "</title></line>\n";
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    const XY& q = pos[p.vertex_count + x];
    out << "<circle class=\"crossing\" cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"2.5\" fill=\"#c00\"><title>"
        << escaped(d.crossings[x].id) << "</title></circle>\n";
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    const XY& q = pos[v];
    out << "<circle class=\"vertex\" cx=\"" << q.x << "\" cy=\"" << q.y
        << "\" r=\"6\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"1.5\"><title>" << escaped(d.vertex_ids[v])
        << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace drawkit
