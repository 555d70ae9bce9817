#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drawkit/drawing.hpp"
#include "drawkit/rational.hpp"

namespace drawkit::detail {

// A point a route passes through: a cycle position (integer = cycle vertex,
// otherwise a crossing with the cycle edge containing it) or a hub vertex.
struct Anchor {
  int hub = -1;
  Rational position;

  static Anchor at(const Rational& position) { return {-1, position}; }
  static Anchor hub_vertex(int hub) { return {hub, 0}; }
};

// Sphere drawing made of a cycle v0..v(L-1) with edges c<i> = v<i> v<i+1>
// splitting it into an inside and an outside disk. Every other edge is a
// route of straight chords, each chord in one disk; a route switches disk
// exactly where it crosses the cycle.
struct TwoDiskModel {
  struct Hub {
    std::string id;
    bool inside = true;
    std::vector<Rational> placed_among;  // drawn at the centroid of these cycle positions
  };
  struct Route {
    std::string id;
    std::vector<Anchor> stops;  // endpoints first and last, cycle crossings between
    std::vector<bool> inside;   // one entry per chord
  };

  int cycle_length = 0;
  std::vector<Hub> hubs;
  std::vector<Route> routes;

  void add_chord(std::string id, Anchor a, Anchor b, bool in) {
    routes.push_back({std::move(id), {std::move(a), std::move(b)}, {in}});
  }
};

// Chords are straight segments between points in convex position, so two
// chords of one disk cross iff their ends interleave. Positions are jittered
// per attempt until no three chords meet in a point.
Drawing realize(const TwoDiskModel& model, std::uint64_t seed = 1);

}  // namespace drawkit::detail
