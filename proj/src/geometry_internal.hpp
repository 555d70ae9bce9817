#pragma once

#include <string>
#include <vector>

#include "drawkit/geometry.hpp"

namespace drawkit::geom {

inline Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point neg(const Point& a) { return {-a.x, -a.y}; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Point along(const Point& a, const Point& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Counterclockwise order of directions starting at the positive x-axis.
int half_plane(const Point& v);
bool angle_less(const Point& a, const Point& b);

struct Contact {
  enum Kind { none, proper, touch, overlap } kind = none;
  Point at;
  Rational t;  // parameter along the first segment
  Rational u;  // parameter along the second segment
};

Contact intersect(const Point& a, const Point& b, const Point& c, const Point& d);
bool on_segment(const Point& p, const Point& a, const Point& b);

struct Piece {
  int edge = -1;
  int index = 0;
  Point a;
  Point b;
  bool a_vertex = false;
  bool b_vertex = false;
};

std::vector<Piece> pieces_of(const GeomDrawing& g);
std::string describe(const GeomDrawing& g, const Piece& p);

}  // namespace drawkit::geom
