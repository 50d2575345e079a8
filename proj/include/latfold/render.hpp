#pragma once

#include <functional>
#include <string>

#include "latfold/ddc.hpp"
#include "latfold/folding.hpp"
#include "latfold/prarray.hpp"

namespace latfold {

// Text renderings of 2D shapes, arrays and dot patterns. Grids print one
// line per lattice row, lowest row first; bounding-box cells outside the
// shape render as the blank string (the shape silhouette), and trailing
// blanks are trimmed.

std::string render_grid(const Shape& s, const std::string& sep, const std::string& blank,
                        const std::function<std::string(const Point&)>& cell);

// folded indices per cell, comma separated
std::string render_coloring(const Coloring& c);
// array bits per cell, space separated
std::string render_bits(const FoldedArray& fa);
// arbitrary per-cell values, comma separated
std::string render_index_grid(const Shape& s, const std::function<i64(const Point&)>& value);
// per-cell hex words, space separated
std::string render_hex_grid(const Shape& s, const std::function<i64(const Point&)>& value);

// dots of one shape copy; '•' for a dot, '·' for an empty cell
std::string render_dots(const DotPattern& dp);

// width x height window of a periodic pattern with lower-left corner at
// origin, same dot glyphs
std::string render_pattern_window(const PeriodicPattern& pp, const Point& origin,
                                  i64 width, i64 height);

// plain-text portable bitmap (P1) of a pattern window, dots as black pixels
std::string pattern_to_pbm(const PeriodicPattern& pp, const Point& origin,
                           i64 width, i64 height);

}  // namespace latfold
