#pragma once

#include <array>
#include <string>
#include <vector>

#include "latfold/base.hpp"

namespace latfold {

// Dot-count bounds for regions of the plane. Everything here is
// floating-point geometry; no value from this module feeds any integer
// verdict elsewhere. Convention: a region family is evaluated at unit scale
// (circumradius R = 1 for polygons and the circle, side/leg length B = 1 for
// the two triangles) and bounds are coefficients of R (or B).

using Vec2 = std::array<double, 2>;
using Polygon = std::vector<Vec2>;  // convex, counterclockwise

double polygon_area(const Polygon& p);
Polygon regular_polygon(int n, double radius, double phase = 0.0);

// Sutherland-Hodgman clip of one convex polygon by another
Polygon convex_intersection(const Polygon& p, const Polygon& q);
// area of the intersection; degenerate inputs yield 0
double convex_intersection_area(const Polygon& p, const Polygon& q);

enum class BoundFamily {
  triangle_eq,
  triangle_iso,
  pentagon,
  hexagon,
  heptagon,
  octagon,
  nonagon,
  decagon,
  ngon_12k,
  circle,
};

const char* bound_family_name(BoundFamily f);
BoundFamily parse_bound_family(const std::string& name);

// admissible parameter ranges, one [lo, hi] pair per free parameter
std::vector<std::array<double, 2>> bound_param_ranges(BoundFamily f);

// the guaranteed-dots coefficient at the given parameters: the covered area
// of the placed tile divided by the square root of the tile area
double eval_lower_bound(BoundFamily f, const std::vector<double>& params, int n = 0);

double upper_coeff(BoundFamily f, int n = 0);

struct BoundResult {
  BoundFamily family = BoundFamily::hexagon;
  int n = 0;  // side count for ngon_12k rows, else informational
  double lower = 0;
  double upper = 0;
  double ratio = 0;
  std::vector<double> argmax;
};

// maximizes the lower bound over the family's free parameters: golden
// section for one, grid refinement plus coordinate descent for two
BoundResult optimize_bound(BoundFamily f, int n = 0);

struct BoundTableRow {
  std::string label;  // "3".."96" or "circle"
  int n = 0;          // 0 for the circle
  double upper = 0;
  double lower = 0;
  double ratio = 0;
};

// the full bound table for n-gons (3..10, 12, 24, ..., 96) and the circle,
// in circumradius units
std::vector<BoundTableRow> table_bounds();

}  // namespace latfold
