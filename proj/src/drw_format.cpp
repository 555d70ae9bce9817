#include "drawkit/drw_format.hpp"

#include <fstream>
#include <sstream>

#include "drawkit/errors.hpp"
#include "tokenize.hpp"

namespace drawkit {

namespace {

void check_id(const Token& t, int line) {
  if (t.text.find('@') != std::string::npos) {
    throw Error(ErrorKind::Syntax, "identifier '" + t.text + "' may not contain '@'", line, t.column);
  }
}

int parse_index(const std::string& s, int line, int column) {
  if (s.empty() || s.size() > 9) throw Error(ErrorKind::Syntax, "bad segment index '" + s + "'", line, column);
  for (char c : s) {
    if (c < '0' || c > '9') throw Error(ErrorKind::Syntax, "bad segment index '" + s + "'", line, column);
  }
  return std::stoi(s);
}

}  // namespace

DrawingSpec parse_drw(std::string_view text) {
  DrawingSpec spec;
  bool surface_seen = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& kw = toks[0].text;
    auto need = [&](std::size_t n, const char* what) {
      if (toks.size() != n) {
        int col = toks.size() > n ? toks[n].column : static_cast<int>(line.size()) + 1;
        throw Error(ErrorKind::Syntax, std::string("expected: ") + what, line_no, col);
      }
    };
    if (kw == "surface") {
      need(2, "surface sphere|plane");
      if (surface_seen) throw Error(ErrorKind::Syntax, "surface given twice", line_no, toks[0].column);
      surface_seen = true;
      if (toks[1].text == "sphere") spec.surface = Surface::sphere;
      else if (toks[1].text == "plane") spec.surface = Surface::plane;
      else throw Error(ErrorKind::Syntax, "unknown surface '" + toks[1].text + "'", line_no, toks[1].column);
    } else if (kw == "vertex") {
      need(2, "vertex <id>");
      check_id(toks[1], line_no);
      spec.vertices.push_back({toks[1].text, line_no});
    } else if (kw == "edge") {
      if (toks.size() < 4) need(4, "edge <id> <v> <v> [cross <x>...]");
      DrawingSpec::EdgeLine e{toks[1].text, toks[2].text, toks[3].text, {}, line_no};
      for (int i = 1; i <= 3; ++i) check_id(toks[i], line_no);
      if (toks.size() > 4) {
        if (toks[4].text != "cross") throw Error(ErrorKind::Syntax, "expected 'cross'", line_no, toks[4].column);
        if (toks.size() == 5) throw Error(ErrorKind::Syntax, "'cross' needs at least one crossing", line_no, toks[4].column);
        for (std::size_t i = 5; i < toks.size(); ++i) {
          check_id(toks[i], line_no);
          e.crossings.push_back(toks[i].text);
        }
      }
      spec.edges.push_back(std::move(e));
    } else if (kw == "cross") {
      need(4, "cross <x> <e> <e>");
      for (int i = 1; i <= 3; ++i) check_id(toks[i], line_no);
      spec.crossings.push_back({toks[1].text, toks[2].text, toks[3].text, line_no});
    } else if (kw == "rot") {
      if (toks.size() < 2) need(2, "rot <v> <e>@s|<e>@t ...");
      DrawingSpec::VertexRotation r{toks[1].text, {}, line_no};
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        auto at = t.find('@');
        if (at == std::string::npos || at == 0 || (t.substr(at + 1) != "s" && t.substr(at + 1) != "t")) {
          throw Error(ErrorKind::Syntax, "expected <edge>@s or <edge>@t, got '" + t + "'", line_no, toks[i].column);
        }
        r.ends.push_back({t.substr(0, at), t.substr(at + 1) == "t"});
      }
      spec.vertex_rotations.push_back(std::move(r));
    } else if (kw == "rotx") {
      need(6, "rotx <x> <e>@<seg> <e>@<seg> <e>@<seg> <e>@<seg>");
      DrawingSpec::CrossingRotation r{toks[1].text, {}, line_no};
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        auto at = t.find('@');
        if (at == std::string::npos || at == 0) {
          throw Error(ErrorKind::Syntax, "expected <edge>@<segment>, got '" + t + "'", line_no, toks[i].column);
        }
        r.ends.push_back({t.substr(0, at), parse_index(t.substr(at + 1), line_no, toks[i].column)});
      }
      spec.crossing_rotations.push_back(std::move(r));
    } else if (kw == "outerdart") {
      need(2, "outerdart <e>@<segment>@+|-");
      if (spec.outer_dart) throw Error(ErrorKind::Syntax, "outerdart given twice", line_no, toks[0].column);
      const std::string& t = toks[1].text;
      auto a = t.find('@');
      auto b = a == std::string::npos ? a : t.find('@', a + 1);
      if (a == std::string::npos || b == std::string::npos || a == 0 || b + 2 != t.size() ||
          (t.back() != '+' && t.back() != '-')) {
        throw Error(ErrorKind::Syntax, "expected <edge>@<segment>@+ or @-", line_no, toks[1].column);
      }
      spec.outer_dart = DrawingSpec::OuterLine{t.substr(0, a), parse_index(t.substr(a + 1, b - a - 1), line_no, toks[1].column),
                                               t.back() == '+', line_no};
    } else {
      throw Error(ErrorKind::Syntax, "unknown keyword '" + kw + "'", line_no, toks[0].column);
    }
    if (end == text.size()) break;
  }
  return spec;
}

std::string serialize_drw(const Drawing& d) {
  std::ostringstream out;
  out << "surface " << (d.surface == Surface::plane ? "plane" : "sphere") << "\n";
  for (const auto& id : d.vertex_ids) out << "vertex " << id << "\n";
  for (const Edge& e : d.edges) {
    out << "edge " << e.id << " " << d.vertex_ids[e.source] << " " << d.vertex_ids[e.target];
    if (!e.crossings.empty()) {
      out << " cross";
      for (int x : e.crossings) out << " " << d.crossings[x].id;
    }
    out << "\n";
  }
  for (const Crossing& c : d.crossings) {
    out << "cross " << c.id << " " << d.edges[c.edge_a].id << " " << d.edges[c.edge_b].id << "\n";
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.vertex_rotations[v].empty()) continue;
    out << "rot " << d.vertex_ids[v];
    for (const EdgeEnd& end : d.vertex_rotations[v]) {
      out << " " << d.edges[end.edge].id << (end.at_target ? "@t" : "@s");
    }
    out << "\n";
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    out << "rotx " << d.crossings[x].id;
    for (const SegmentEnd& se : d.crossing_rotations[x]) out << " " << d.edges[se.edge].id << "@" << se.segment;
    out << "\n";
  }
  if (d.outer_dart) {
    out << "outerdart " << d.edges[d.outer_dart->edge].id << "@" << d.outer_dart->segment << "@"
        << (d.outer_dart->forward ? "+" : "-") << "\n";
  }
  return out.str();
}

Drawing read_drw_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Syntax, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return build_drawing(parse_drw(buf.str()));
}

void write_drw_file(const Drawing& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Syntax, "cannot write '" + path + "'");
  out << serialize_drw(d);
}

}  // namespace drawkit
