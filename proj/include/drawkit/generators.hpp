#pragma once

#include "drawkit/drawing.hpp"

namespace drawkit {

// n vertices, 8n-20 edges, quasiplanar and non-homotopic. Throws NTooSmall below 4.
Drawing gen_quasiplanar_nonhomotopic(int n);

// n vertices, 6.5n-20 edges, simple and quasiplanar. Throws NOdd, NTooSmall,
// and GenerationFailed when the construction does not validate for this n.
Drawing gen_quasiplanar_simple(int n);

// Quadrangulation with both diagonals crossing in every face: 4n-8 edges,
// 1-planar. Throws NOdd, NTooSmall below 8.
Drawing gen_one_planar_tight(int n);

// Adds uncrossed edges until every pair of vertices sharing a cell is joined
// on its boundary. Requires a non-homotopic quasiplanar drawing.
Drawing fill(const Drawing& d);

// Filling that keeps the drawing simple, replacing crossed parallel copies by
// the new uncrossed edge. Requires a simple quasiplanar drawing of a
// 3-connected graph.
Drawing fill_simple(const Drawing& d);

// Removes all T6 cells of a filled non-homotopic quasiplanar drawing by
// adding edges.
Drawing eliminate_t_cells(const Drawing& d);

}  // namespace drawkit
