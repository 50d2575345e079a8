#pragma once

#include "latfold/fields.hpp"
#include "latfold/folding.hpp"

namespace latfold {

// Distinct difference configuration machinery: dots are distributed over a
// shape (or periodically over the whole grid) so that all pairwise difference
// vectors between dots are distinct.

struct DotPattern {
  Shape shape;
  std::vector<Point> dots;  // sorted subset of shape.points
};

struct PeriodicPattern {
  int dim = 0;
  std::vector<i64> period;  // box extents per axis
  std::vector<Point> dots;  // sorted dots inside the fundamental box
  i64 box_cells() const {
    i64 n = 1;
    for (i64 e : period) n *= e;
    return n;
  }
  // dots per box over box cells, as an exact pair
  std::pair<i64, i64> density() const { return {static_cast<i64>(dots.size()), box_cells()}; }
  bool dot_at(const Point& p) const;
  // reduce a point into the fundamental box
  Point wrap(const Point& p) const;
  PeriodicPattern flipped_horizontal() const;
};

struct DdcCheck {
  bool ok = false;
  std::string reason;
  std::optional<std::array<Point, 4>> witness;  // a1, a2, b1, b2 with a2-a1 == b2-b1
};

// mark dots on the cells of a folded shape whose color lies in the set
DotPattern fold_dots(const Coloring& col, const B2Set& b);
DotPattern fold_dots(const Tiling& t, const Point& delta, const B2Set& b);

DdcCheck verify_ddc(const std::vector<Point>& dots);
inline DdcCheck verify_ddc(const DotPattern& p) { return verify_ddc(p.dots); }

// periodic pattern with period (n,...,n), n = |S|: dot wherever the lattice
// coloring value lies in the set
PeriodicPattern build_periodic(const Coloring& col, const B2Set& b);

// checks every shift of the shape with base point in one period box; each
// shifted window's dots must form a DDC
DdcCheck verify_periodic_sddc(const PeriodicPattern& pp, const Shape& s,
                              i64 budget = 1'000'000);

struct Placement {
  Point offset;     // translation applied to the query shape
  int symmetry = 0; // index into grid_symmetries(query)
  i64 count = 0;
  std::vector<Point> dots;  // absolute dot positions inside the placed query
};

// best translation of the query shape (optionally over its 8 grid symmetries)
// within one period box of the pattern
Placement best_placement(const PeriodicPattern& pp, const Shape& query,
                         bool use_symmetries = true, i64 budget = 1'000'000);

// Named families: each assembles a lattice, shape, direction and a B2 set of
// size p over Z_{p^2-1}, folds, and returns a verified periodic pattern.
enum class DdcFamily { rectangle, corner, flipped_t };

struct FamilyParams {
  i64 p = 0;                  // prime power; the dot count
  std::optional<i64> n1;      // even split n1 * n2 = p^2 - 1
  std::optional<i64> w2;      // flipped T free width parameter
};

struct FamilyInstance {
  DdcFamily family = DdcFamily::rectangle;
  i64 p = 0;
  i64 n1 = 0, n2 = 0;
  Lattice lat;
  Shape shape;
  Point delta;
  B2Set b2;
  DotPattern pattern;
  PeriodicPattern periodic;
};

FamilyInstance construct_ddc_family(DdcFamily family, const FamilyParams& params);

const char* family_name(DdcFamily f);
DdcFamily parse_family(const std::string& name);

}  // namespace latfold
