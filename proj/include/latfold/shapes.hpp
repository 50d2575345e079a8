#pragma once

#include "latfold/lattice.hpp"

namespace latfold {

// Named shape builders. All shapes are 2D unless noted, normalized afterward
// is optional: these builders return shapes with the center at the origin.

// a rows x b columns box of cells (x = column, y = row), dim 2
Shape rect_shape(i64 rows, i64 cols);
// D-dimensional box with the given extent per axis
Shape box_shape(const std::vector<i64>& dims);
// horizontal strip of n cells (alias for rect_shape(1, n))
Shape strip_shape(i64 n);

// Corner: an H x W rectangle with an h2 x w2 block removed from its upper
// right corner. Rows 0..H-h2-1 have width W; rows H-h2..H-1 have width W-w2.
Shape corner_shape(i64 H, i64 W, i64 h2, i64 w2);

// Flipped T: 2h rows; the bottom h rows have full width w1+w2+w3; the top h
// rows keep only the middle strip x in [w1, w1+w2).
Shape flipped_t_shape(i64 h, i64 w1, i64 w2, i64 w3);

// Hexagonal sphere of radius R in the square representation of the hex grid:
// the (2R+1) x (2R+1) square centered at the origin minus the upper-left and
// lower-right staircase triangles, i.e. {(x,y): |x|,|y| <= R, |x-y| <= R}.
Shape hex_sphere_shape(i64 R);

// closed-form cell count of hex_sphere_shape(R)
i64 hex_sphere_count(i64 R);

// The six hex-grid neighbors of p in the square representation.
std::vector<Point> hex_neighbors(const Point& p);

// The hex-to-plane placement map xi(x,y) = (x + y/sqrt(3), 2y/sqrt(3)),
// rendering only.
std::array<double, 2> hex_to_plane(double x, double y);

// Exact comparison helpers for the square <-> hex representation transfer:
// segments are compared by squared length and slope without floating point.
// In the hex model the squared length of an integer offset d is
// (3*dx^2 + 5*dy^2 + 2*sqrt(3)*dx*dy)/3, represented by the integer pair
// (3*dx^2 + 5*dy^2, 2*dx*dy).
bool segments_match_square(const Point& d1, const Point& d2);
bool segments_match_hex(const Point& d1, const Point& d2);

// One morph step: move the cell of the shape's copy covering p+delta into the
// shape. Requires (lat, s, delta) to define a folding, p in s, p+delta not in
// s, and the displaced cell must not be the center. The result tiles with the
// same lattice and keeps the same folded row length.
Shape morph_shape(const Lattice& lat, const Shape& s, const Point& delta, const Point& p);

// Greedy morph schedule: repeatedly apply the morph step that most shrinks
// the symmetric difference to the target cell set, until no step improves.
// Returns the sequence of shapes visited (first = start, last = best reached).
std::vector<Shape> morph_toward(const Lattice& lat, const Shape& start, const Point& delta,
                                const Shape& target, int max_steps = 10000);

// Shape spec strings: rect:R,C / box:n1,n2,... / strip:N / corner:H,W,h2,w2 /
// flippedt:h,w1,w2,w3 / hexsphere:R
Shape parse_shape_spec(const std::string& spec);

// The canonical box of coset representatives of a lattice; always tiles with
// that lattice, handy as a default shape.
Shape coset_box_shape(const Lattice& lat);

// Axis-aligned symmetry images of a 2D shape: rotations by multiples of 90
// degrees and their reflections, re-normalized, deduplicated.
std::vector<Shape> grid_symmetries(const Shape& s);

// Mirror a 2D shape left-right (x -> -x), re-normalized to its original center
// cell.
Shape flip_horizontal(const Shape& s);

}  // namespace latfold
