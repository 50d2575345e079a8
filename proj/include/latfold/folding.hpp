#pragma once

#include "latfold/lattice.hpp"

namespace latfold {

// Walking by delta from the origin, stepping back into the origin copy via
// the center map whenever the step leaves it. The walk returns to the origin
// after t steps, where t is the order of delta in the quotient group Z^D /
// lattice; t always divides the volume, and (lattice, shape, delta) is a
// folding exactly when t equals the volume.

// number of steps until the walk returns to the origin coset
i64 folded_row_length(const Lattice& lat, const Point& delta);

bool is_folding_bruteforce(const Lattice& lat, const Point& delta);
bool is_folding_bruteforce(const Tiling& t, const Point& delta);

// the visited cells in walk order, starting at the origin; length equals
// folded_row_length (== |S| for a folding)
std::vector<Point> folded_row(const Tiling& t, const Point& delta);

// per-cell folded indices in shape point order (inverse view of folded_row);
// -1 for cells the walk never reaches when the direction does not fold
std::vector<i64> folded_indices(const Tiling& t, const Point& delta);

// Closed-form 2D predicate via gcd conditions on the generator matrix
// [[v11, v12], [v21, v22]] and the direction (d1, d2).
bool is_folding_2d(const Lattice& lat, const Point& delta);

struct FoldingCertificate {
  bool folds = false;
  std::string reason;
  i64 volume = 0;
  i64 tau = 0;           // gcd of the nonzero direction magnitudes
  int ell1 = 0;          // positive direction entries (after normalization)
  int ell2 = 0;          // negative direction entries
  std::vector<i64> alpha;  // integer solution of alpha * G = volume * delta
  i64 alpha_gcd = 0;     // gcd of |alpha_i| / tau
  bool tau_coprime = false;  // gcd(tau, volume) == 1
};

// D-dimensional closed-form predicate. Computes the integer coefficients
// alpha with sum_j alpha_j * row_j(G) = volume * delta via exact minors,
// cross-checks that identity, and reports folds = (gcd_i |alpha_i|/tau == 1
// and gcd(tau, volume) == 1).
FoldingCertificate is_folding_ddim(const Lattice& lat, const Point& delta);

// Lattice coloring induced by a folding: color(p) = folded index of the cell
// of p. Total on Z^D, constant on cosets, steps by +1 along delta.
class Coloring {
 public:
  static Coloring of(Tiling t, const Point& delta);

  i64 color(const Point& p) const {
    return color_by_coset_[static_cast<size_t>(tiling_.lattice().coset_index(p))];
  }
  i64 period() const { return tiling_.lattice().volume(); }
  const Point& delta() const { return delta_; }
  const Tiling& tiling() const { return tiling_; }
  const std::vector<Point>& row() const { return row_; }

 private:
  Coloring(Tiling t, Point delta, std::vector<Point> row, std::vector<i64> colors)
      : tiling_(std::move(t)), delta_(delta), row_(std::move(row)),
        color_by_coset_(std::move(colors)) {}
  Tiling tiling_;
  Point delta_;
  std::vector<Point> row_;
  std::vector<i64> color_by_coset_;
};

struct FoldingClass {
  Point delta;             // representative direction (a shape point)
  std::vector<Point> row;  // its folded row
};

struct FoldingEnumeration {
  std::vector<FoldingClass> classes;
  i64 directions_tested = 0;
  i64 directions_folding = 0;
};

// Tries every non-center shape point as a direction; groups foldings whose
// rows are equal or reversed. When any folding exists the class count is
// phi(|S|)/2 for |S| >= 3.
FoldingEnumeration enumerate_foldings(const Tiling& t);

i64 euler_phi(i64 n);

// Classic sequence-to-array foldings on an r x t box.
enum class ClassicKind {
  diagonal,   // successive cells move one right and one up, gcd(r,t) = 1
  row_major,  // bottom row left to right, then the next row up
  coloring_diag,  // the diagonal scheme indexed by (r-1)x + ry mod (rt-1) on an (rt-1)-cell window
};

struct ClassicFold {
  Lattice lat;
  Shape shape;
  Point delta;
};

// diagonal / row_major: r rows by t columns. coloring_diag: parameters (w, h)
// build the n = w*h-1 cell diagonal scheme whose colors are (w-1)x + wy mod n.
ClassicFold classic_fold(ClassicKind kind, i64 r, i64 t);

}  // namespace latfold
