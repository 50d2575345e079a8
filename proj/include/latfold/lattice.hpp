#pragma once

#include <optional>

#include "latfold/base.hpp"

namespace latfold {

// Full-rank integer lattice in Z^dim, spanned by the rows of a generator
// matrix. Canonical data is a lower-triangular Hermite normal form with
// positive diagonal and below-diagonal entries reduced modulo the diagonal;
// reduce() maps any point to its unique coset representative inside the box
// [0,h00) x [0,h11) x ... and coset_index() numbers those representatives in
// mixed radix, so a lattice of volume V has cosets 0..V-1.
class Lattice {
 public:
  static Lattice of(const Mat& gen);
  static Lattice from_rows(const std::vector<std::vector<i64>>& rows) {
    return of(Mat::from_rows(rows));
  }

  int dim() const { return gen_.n; }
  i64 volume() const { return volume_; }
  const Mat& gen() const { return gen_; }
  const Mat& hnf() const { return hnf_; }

  Point reduce(Point p) const;
  bool contains(const Point& p) const { return reduce(p).is_zero(); }
  i64 coset_index(const Point& p) const;
  // representative with the given coset index (inverse of coset_index on the box)
  Point coset_rep(i64 index) const;

  bool operator==(const Lattice& o) const { return hnf_ == o.hnf_; }

 private:
  Lattice() = default;
  Mat gen_;
  Mat hnf_;
  i64 volume_ = 0;
  std::array<i64, kMaxDim> stride_{};
};

// Finite set of distinct integer points with a distinguished center.
// Normalized form keeps points sorted and translated so the center is the
// origin; the default center is the lexicographically smallest point.
struct Shape {
  int dim = 0;
  std::vector<Point> points;  // sorted, distinct, contains the origin after normalization
  Point center;               // always the origin after normalization

  static Shape of(int dim, std::vector<Point> pts,
                  std::optional<Point> center = std::nullopt);

  size_t size() const { return points.size(); }
  bool contains(const Point& p) const;
  // re-normalize with a different center (must be a current point)
  Shape recentered(const Point& new_center) const;
  // bounding box [lo, hi] per axis
  std::pair<Point, Point> bounding_box() const;
};

struct TilingCheck {
  bool ok = false;
  std::string reason;
  // two distinct shape points in the same lattice coset, when !ok for that reason
  std::optional<std::pair<Point, Point>> collision;
};

TilingCheck verify_tiling(const Lattice& lat, const Shape& s);

// A lattice tiling: the copies of the shape translated by lattice points
// partition Z^dim. Construction verifies the tiling property and stores the
// coset -> cell table, so cell_of/center_of run in O(dim) per query.
class Tiling {
 public:
  static Tiling of(Lattice lat, Shape s);

  const Lattice& lattice() const { return lat_; }
  const Shape& shape() const { return shape_; }
  i64 size() const { return static_cast<i64>(shape_.points.size()); }

  // the shape cell congruent to p (i.e. p translated into the origin copy)
  Point cell_of(const Point& p) const;
  // the lattice point whose copy of the shape contains p
  Point center_of(const Point& p) const { return p - cell_of(p); }

 private:
  Tiling(Lattice lat, Shape s, std::vector<Point> cells)
      : lat_(std::move(lat)), shape_(std::move(s)), cell_by_coset_(std::move(cells)) {}
  Lattice lat_;
  Shape shape_;
  std::vector<Point> cell_by_coset_;
};

}  // namespace latfold
