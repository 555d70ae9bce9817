#include "drawkit/generators.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drawkit/classes.hpp"
#include "drawkit/errors.hpp"
#include "drawkit/properties.hpp"
#include "two_disk.hpp"

namespace drawkit {

namespace {

using detail::Anchor;
using detail::TwoDiskModel;

// Zig-zag path grown from the chord (start, start+2): each move extends the
// left end backwards or the right end forwards, alternating, starting to the
// right. With `repeat_at` > 0 the move at that index repeats its predecessor.
std::vector<std::pair<int, int>> zigzag(int start, int moves, int repeat_at = 0) {
  std::vector<std::pair<int, int>> chords;
  int a = start, b = start + 2;
  bool right = true;
  for (int i = 0; i < moves; ++i) {
    if (right) {
      ++b;
    } else {
      --a;
    }
    chords.push_back({a, b});
    if (i + 1 != repeat_at) right = !right;
  }
  return chords;
}

void add_path(TwoDiskModel& m, const std::string& name, const std::vector<std::pair<int, int>>& chords, bool inside) {
  for (std::size_t i = 0; i < chords.size(); ++i) {
    m.add_chord(name + "_" + std::to_string(i), Anchor::at(chords[i].first), Anchor::at(chords[i].second), inside);
  }
}

// Route from the cycle vertex `from` to `from + 3`, crossing the cycle halfway.
void add_distance_three(TwoDiskModel& m, const std::string& id, int from, bool start_inside) {
  m.routes.push_back({id,
                      {Anchor::at(from), Anchor::at(Rational(2 * from + 3, 2)), Anchor::at(from + 3)},
                      {start_inside, !start_inside}});
}

void expect(bool ok, const std::string& what, int n) {
  if (!ok) throw Error(ErrorKind::GenerationFailed, what + " fails for n = " + std::to_string(n));
}

}  // namespace

Drawing gen_quasiplanar_nonhomotopic(int n) {
  if (n < 4) throw Error(ErrorKind::NTooSmall, "n must be at least 4");
  TwoDiskModel m;
  m.cycle_length = n;
  const int ears = n == 4 ? 2 : n;
  for (int i = 0; i < ears; ++i) {
    m.add_chord("a" + std::to_string(i), Anchor::at(i), Anchor::at(i + 2), true);
    m.add_chord("b" + std::to_string(i), Anchor::at(i), Anchor::at(i + 2), false);
  }
  for (int i = 0; i < n; ++i) add_distance_three(m, "d" + std::to_string(i), i, true);
  if (n > 5) {
    add_path(m, "p0", zigzag(0, n - 5), true);
    add_path(m, "p1", zigzag(1, n - 5), true);
    add_path(m, "q0", zigzag(0, n - 5), false);
    add_path(m, "q1", zigzag(1, n - 5), false);
  }
  Drawing d = detail::realize(m);
  expect(d.edge_count() == 8 * n - 20, "edge count", n);
  expect(is_quasiplanar(d), "quasiplanarity", n);
  expect(is_non_homotopic(d), "non-homotopy", n);
  return d;
}

Drawing gen_quasiplanar_simple(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::NOdd, "n must be even");
  if (n < 8) throw Error(ErrorKind::NTooSmall, "n must be at least 8");
  TwoDiskModel m;
  m.cycle_length = n;
  // Even cycle vertices are black, odd ones white.
  for (int i = 0; i < n; i += 2) {
    m.add_chord("a" + std::to_string(i), Anchor::at(i), Anchor::at(i + 2), true);
    m.add_chord("b" + std::to_string(i + 1), Anchor::at(i + 1), Anchor::at(i + 3), false);
    add_distance_three(m, "d" + std::to_string(i + 1), i + 1, false);
  }
  const int repeat_at = n % 4 == 2 ? 2 : 0;
  add_path(m, "p0", zigzag(0, n - 5, repeat_at), true);
  add_path(m, "p1", zigzag(2, n - 5, repeat_at), true);
  add_path(m, "q0", zigzag(4, n - 5, repeat_at), false);
  add_path(m, "q1", zigzag(6, n - 5, repeat_at), false);
  Drawing d = detail::realize(m);
  expect(d.edge_count() * 2 == 13 * n - 40, "edge count", n);
  expect(is_simple(d), "simplicity", n);
  expect(is_quasiplanar(d), "quasiplanarity", n);
  return d;
}

Drawing gen_one_planar_tight(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::NOdd, "n must be even");
  if (n < 8) throw Error(ErrorKind::NTooSmall, "n must be at least 8");
  // Even cycle of length n-2; hub u inside sees the even positions, hub w
  // outside the odd ones. Each of the n-2 quadrangles gets both diagonals.
  const int length = n - 2;
  TwoDiskModel m;
  m.cycle_length = length;
  TwoDiskModel::Hub u{"u", true, {}}, w{"w", false, {}};
  for (int i = 0; i < length; ++i) (i % 2 == 0 ? u : w).placed_among.push_back(i);
  m.hubs = {u, w};
  for (int i = 0; i < length; ++i) {
    const bool inside = i % 2 == 0;
    const Anchor hub = Anchor::hub_vertex(inside ? 0 : 1);
    const std::string k = std::to_string(i);
    m.add_chord("s" + k, hub, Anchor::at(i), inside);
    m.add_chord("t" + k, Anchor::at(i), Anchor::at(i + 2), inside);
    m.add_chord("r" + k, hub, Anchor::at(i + 1), inside);
  }
  Drawing d = detail::realize(m);
  expect(d.edge_count() == 4 * n - 8, "edge count", n);
  expect(is_k_planar(d, 1), "1-planarity", n);
  expect(is_non_homotopic(d), "non-homotopy", n);
  return d;
}

}  // namespace drawkit
