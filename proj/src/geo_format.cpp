#include "drawkit/geo_format.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "drawkit/errors.hpp"
#include "tokenize.hpp"

namespace drawkit {

namespace {

Rational coordinate(const Token& t, int line) {
  auto r = parse_rational(t.text);
  if (!r) throw Error(ErrorKind::Syntax, "expected an exact rational, got '" + t.text + "'", line, t.column);
  return *r;
}

}  // namespace

GeomDrawing parse_geo(std::string_view text) {
  GeomDrawing g;
  std::unordered_map<std::string, int> vertex_index;
  std::unordered_map<std::string, int> edge_lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto toks = tokenize(line);
    if (!toks.empty()) {
      const std::string& kw = toks[0].text;
      if (kw == "vertex") {
        if (toks.size() != 4) throw Error(ErrorKind::Syntax, "expected: vertex <id> <x> <y>", line_no, toks[0].column);
        if (vertex_index.count(toks[1].text)) {
          throw Error(ErrorKind::DuplicateId, "vertex '" + toks[1].text + "' defined twice", line_no, toks[1].column);
        }
        vertex_index[toks[1].text] = static_cast<int>(g.points.size());
        g.vertex_ids.push_back(toks[1].text);
        g.points.push_back({coordinate(toks[2], line_no), coordinate(toks[3], line_no)});
      } else if (kw == "edge") {
        if (toks.size() < 4) {
          throw Error(ErrorKind::Syntax, "expected: edge <id> <u> <v> [via <x> <y> ...]", line_no, toks[0].column);
        }
        if (edge_lines.count(toks[1].text)) {
          throw Error(ErrorKind::DuplicateId, "edge '" + toks[1].text + "' defined twice", line_no, toks[1].column);
        }
        GeomEdge e;
        e.id = toks[1].text;
        for (int i : {2, 3}) {
          auto it = vertex_index.find(toks[i].text);
          if (it == vertex_index.end()) {
            throw Error(ErrorKind::UnknownReference, "unknown vertex '" + toks[i].text + "'", line_no, toks[i].column);
          }
          (i == 2 ? e.source : e.target) = it->second;
        }
        if (e.source == e.target) throw Error(ErrorKind::LoopEdge, "edge '" + e.id + "' is a loop", line_no, toks[1].column);
        if (toks.size() > 4) {
          if (toks[4].text != "via") throw Error(ErrorKind::Syntax, "expected 'via'", line_no, toks[4].column);
          if (toks.size() == 5 || (toks.size() - 5) % 2 != 0) {
            throw Error(ErrorKind::Syntax, "'via' needs pairs of coordinates", line_no, toks[4].column);
          }
          for (std::size_t i = 5; i < toks.size(); i += 2) {
            e.bends.push_back({coordinate(toks[i], line_no), coordinate(toks[i + 1], line_no)});
          }
        }
        edge_lines[e.id] = line_no;
        g.edges.push_back(std::move(e));
      } else {
        throw Error(ErrorKind::Syntax, "unknown keyword '" + kw + "'", line_no, toks[0].column);
      }
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string serialize_geo(const GeomDrawing& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.points.size(); ++v) {
    out << "vertex " << g.vertex_ids[v] << " " << to_fraction(g.points[v].x) << " " << to_fraction(g.points[v].y)
        << "\n";
  }
  for (const GeomEdge& e : g.edges) {
    out << "edge " << e.id << " " << g.vertex_ids[e.source] << " " << g.vertex_ids[e.target];
    if (!e.bends.empty()) {
      out << " via";
      for (const Point& p : e.bends) out << " " << to_fraction(p.x) << " " << to_fraction(p.y);
    }
    out << "\n";
  }
  return out.str();
}

GeomDrawing read_geo_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Syntax, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_geo(buf.str());
}

void write_geo_file(const GeomDrawing& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Syntax, "cannot write '" + path + "'");
  out << serialize_geo(g);
}

}  // namespace drawkit
