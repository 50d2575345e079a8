#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "latfold/folding.hpp"
#include "latfold/shapes.hpp"

namespace latfold {

Shape Shape::of(int dim, std::vector<Point> pts, std::optional<Point> center) {
  require(dim >= 1 && dim <= kMaxDim, Errc::dim_mismatch,
          "dimension must be between 1 and " + std::to_string(kMaxDim));
  require(!pts.empty(), Errc::bad_input, "shape must have at least one point");
  for (const Point& p : pts)
    require(p.dim == dim, Errc::dim_mismatch, "shape point dimension mismatch");
  std::sort(pts.begin(), pts.end());
  for (size_t i = 1; i < pts.size(); ++i)
    require(pts[i] != pts[i - 1], Errc::bad_input,
            "shape points must be distinct, got " + to_string(pts[i]) + " twice");
  Point c = center.value_or(pts.front());
  Shape s;
  s.dim = dim;
  s.points.reserve(pts.size());
  bool center_seen = false;
  for (const Point& p : pts) {
    if (p == c) center_seen = true;
    s.points.push_back(p - c);
  }
  require(center_seen, Errc::bad_input, "center must be one of the shape points");
  s.center = Point::zero(dim);
  return s;
}

bool Shape::contains(const Point& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

Shape Shape::recentered(const Point& new_center) const {
  require(contains(new_center), Errc::bad_input, "new center must be a shape point");
  return Shape::of(dim, points, new_center);
}

std::pair<Point, Point> Shape::bounding_box() const {
  Point lo = points.front(), hi = points.front();
  for (const Point& p : points)
    for (int i = 0; i < dim; ++i) {
      lo.c[i] = std::min(lo.c[i], p.c[i]);
      hi.c[i] = std::max(hi.c[i], p.c[i]);
    }
  return {lo, hi};
}

Shape rect_shape(i64 rows, i64 cols) {
  require(rows >= 1 && cols >= 1, Errc::bad_input, "rectangle sides must be positive");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(rows * cols));
  for (i64 y = 0; y < rows; ++y)
    for (i64 x = 0; x < cols; ++x) pts.push_back({x, y});
  return Shape::of(2, std::move(pts));
}

Shape box_shape(const std::vector<i64>& dims) {
  require(!dims.empty() && dims.size() <= kMaxDim, Errc::dim_mismatch,
          "box dimension must be between 1 and " + std::to_string(kMaxDim));
  i64 total = 1;
  for (i64 n : dims) {
    require(n >= 1, Errc::bad_input, "box sides must be positive");
    total = checked_narrow(static_cast<i128>(total) * n, "box size");
  }
  require(total <= (i64(1) << 26), Errc::shape_too_large, "box has too many cells");
  int d = static_cast<int>(dims.size());
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(total));
  Point p(d);
  while (true) {
    pts.push_back(p);
    int axis = 0;
    while (axis < d) {
      if (++p.c[axis] < dims[axis]) break;
      p.c[axis] = 0;
      ++axis;
    }
    if (axis == d) break;
  }
  return Shape::of(d, std::move(pts));
}

Shape strip_shape(i64 n) { return rect_shape(1, n); }

Shape corner_shape(i64 H, i64 W, i64 h2, i64 w2) {
  require(H >= 1 && W >= 1, Errc::bad_input, "corner rectangle sides must be positive");
  require(h2 >= 1 && w2 >= 1 && h2 < H && w2 < W, Errc::bad_input,
          "removed block must be nonempty and strictly smaller than the rectangle");
  std::vector<Point> pts;
  for (i64 y = 0; y < H; ++y) {
    i64 width = (y < H - h2) ? W : W - w2;
    for (i64 x = 0; x < width; ++x) pts.push_back({x, y});
  }
  return Shape::of(2, std::move(pts));
}

Shape flipped_t_shape(i64 h, i64 w1, i64 w2, i64 w3) {
  require(h >= 1 && w1 >= 1 && w2 >= 1 && w3 >= 1, Errc::bad_input,
          "flipped T parameters must be positive");
  std::vector<Point> pts;
  for (i64 y = 0; y < h; ++y)
    for (i64 x = 0; x < w1 + w2 + w3; ++x) pts.push_back({x, y});
  for (i64 y = h; y < 2 * h; ++y)
    for (i64 x = w1; x < w1 + w2; ++x) pts.push_back({x, y});
  return Shape::of(2, std::move(pts));
}

Shape hex_sphere_shape(i64 R) {
  require(R >= 0, Errc::bad_input, "radius must be nonnegative");
  require(R <= 4000, Errc::shape_too_large, "radius too large");
  std::vector<Point> pts;
  for (i64 y = -R; y <= R; ++y)
    for (i64 x = -R; x <= R; ++x)
      if (std::llabs(x - y) <= R) pts.push_back({x, y});
  return Shape::of(2, std::move(pts), Point{0, 0});
}

i64 hex_sphere_count(i64 R) { return (2 * R + 1) * (2 * R + 1) - R * (R + 1); }

std::vector<Point> hex_neighbors(const Point& p) {
  require(p.dim == 2, Errc::dim_mismatch, "hex grid points are 2-dimensional");
  static const i64 offs[6][2] = {{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
  std::vector<Point> out;
  out.reserve(6);
  for (auto& o : offs) out.push_back(p + Point{o[0], o[1]});
  return out;
}

std::array<double, 2> hex_to_plane(double x, double y) {
  static const double s3 = std::sqrt(3.0);
  return {x + y / s3, 2.0 * y / s3};
}

namespace {

// squared length and slope captured exactly: square model
struct SegKey {
  i64 len2a, len2b;  // squared length as a + b*sqrt(3) (b = 0 in the square model)
  i64 sx, sy;        // slope as a reduced direction with canonical sign
};

SegKey square_key(const Point& d) {
  i64 g = std::gcd(std::abs(d.x()), std::abs(d.y()));
  i64 sx = 0, sy = 0;
  if (g != 0) {
    sx = d.x() / g;
    sy = d.y() / g;
    if (sx < 0 || (sx == 0 && sy < 0)) { sx = -sx; sy = -sy; }
  }
  return {d.x() * d.x() + d.y() * d.y(), 0, sx, sy};
}

SegKey hex_key(const Point& d) {
  // direction of xi(d) is proportional to (sqrt(3)*dx + dy, 2*dy); two hex
  // directions coincide iff the square-model cross product vanishes, so the
  // slope key can reuse the reduced integer direction
  SegKey k = square_key(d);
  k.len2a = 3 * d.x() * d.x() + 5 * d.y() * d.y();
  k.len2b = 2 * d.x() * d.y();
  return k;
}

bool key_eq(const SegKey& a, const SegKey& b) {
  return a.len2a == b.len2a && a.len2b == b.len2b && a.sx == b.sx && a.sy == b.sy;
}

}  // namespace

bool segments_match_square(const Point& d1, const Point& d2) {
  return key_eq(square_key(d1), square_key(d2));
}

bool segments_match_hex(const Point& d1, const Point& d2) {
  return key_eq(hex_key(d1), hex_key(d2));
}

Shape morph_shape(const Lattice& lat, const Shape& s, const Point& delta, const Point& p) {
  Tiling t = Tiling::of(lat, s);
  require(is_folding_bruteforce(lat, delta), Errc::morph_not_applicable,
          "the direction does not define a folding for this lattice");
  require(s.contains(p), Errc::morph_not_applicable, "point is not in the shape");
  Point q = p + delta;
  require(!s.contains(q), Errc::morph_not_applicable,
          "point plus direction is still inside the shape");
  Point displaced = t.cell_of(q);
  require(!displaced.is_zero(), Errc::morph_not_applicable,
          "morph would remove the center cell");
  std::vector<Point> pts;
  pts.reserve(s.points.size());
  for (const Point& x : s.points)
    if (x != displaced) pts.push_back(x);
  pts.push_back(q);
  Shape out = Shape::of(s.dim, std::move(pts), Point::zero(s.dim));
  TilingCheck chk = verify_tiling(lat, out);
  require(chk.ok, Errc::internal_inconsistency, "morphed shape no longer tiles: " + chk.reason);
  return out;
}

std::vector<Shape> morph_toward(const Lattice& lat, const Shape& start, const Point& delta,
                                const Shape& target, int max_steps) {
  auto mismatch = [&](const Shape& s) {
    i64 missing = 0;
    for (const Point& p : target.points)
      if (!s.contains(p)) ++missing;
    return missing;
  };
  std::vector<Shape> seq{start};
  i64 best = mismatch(start);
  for (int step = 0; step < max_steps && best > 0; ++step) {
    const Shape& cur = seq.back();
    bool improved = false;
    Shape next = cur;
    for (const Point& p : cur.points) {
      Shape cand = cur;
      try {
        cand = morph_shape(lat, cur, delta, p);
      } catch (const Error& e) {
        if (e.code() != Errc::morph_not_applicable) throw;
        continue;
      }
      i64 m = mismatch(cand);
      if (m < best) {
        best = m;
        next = cand;
        improved = true;
      }
    }
    if (!improved) break;
    seq.push_back(next);
  }
  return seq;
}

namespace {

std::vector<i64> parse_int_list(const std::string& s) {
  std::vector<i64> out;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    try {
      out.push_back(std::stoll(s.substr(i, j - i)));
    } catch (const std::exception&) {
      fail(Errc::bad_input, "expected an integer list, got '" + s + "'");
    }
    i = j + 1;
  }
  return out;
}

}  // namespace

Shape coset_box_shape(const Lattice& lat) {
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(lat.volume()));
  for (i64 i = 0; i < lat.volume(); ++i) pts.push_back(lat.coset_rep(i));
  return Shape::of(lat.dim(), std::move(pts), Point::zero(lat.dim()));
}

std::vector<Shape> grid_symmetries(const Shape& s) {
  require(s.dim == 2, Errc::dim_mismatch, "grid symmetries are 2-dimensional");
  std::vector<Shape> out;
  for (int rot = 0; rot < 4; ++rot) {
    for (int refl = 0; refl < 2; ++refl) {
      std::vector<Point> pts;
      pts.reserve(s.points.size());
      for (const Point& p : s.points) {
        i64 x = p.x(), y = p.y();
        if (refl) x = -x;
        for (int k = 0; k < rot; ++k) {
          i64 nx = -y, ny = x;
          x = nx;
          y = ny;
        }
        pts.push_back({x, y});
      }
      Shape img = Shape::of(2, std::move(pts));
      bool dup = false;
      for (const Shape& prev : out)
        if (prev.points == img.points) { dup = true; break; }
      if (!dup) out.push_back(std::move(img));
    }
  }
  return out;
}

Shape flip_horizontal(const Shape& s) {
  require(s.dim == 2, Errc::dim_mismatch, "flip is 2-dimensional");
  std::vector<Point> pts;
  pts.reserve(s.points.size());
  for (const Point& p : s.points) pts.push_back({-p.x(), p.y()});
  return Shape::of(2, std::move(pts), Point{0, 0});
}

Shape parse_shape_spec(const std::string& spec) {
  size_t colon = spec.find(':');
  require(colon != std::string::npos, Errc::bad_input,
          "shape spec must look like kind:params, got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::vector<i64> v = parse_int_list(spec.substr(colon + 1));
  auto want = [&](size_t n) {
    require(v.size() == n, Errc::bad_input,
            kind + " expects " + std::to_string(n) + " parameters");
  };
  if (kind == "rect") { want(2); return rect_shape(v[0], v[1]); }
  if (kind == "box") { return box_shape(v); }
  if (kind == "strip") { want(1); return strip_shape(v[0]); }
  if (kind == "corner") { want(4); return corner_shape(v[0], v[1], v[2], v[3]); }
  if (kind == "flippedt") { want(4); return flipped_t_shape(v[0], v[1], v[2], v[3]); }
  if (kind == "hexsphere") { want(1); return hex_sphere_shape(v[0]); }
  fail(Errc::bad_input, "unknown shape kind '" + kind + "'");
}

}  // namespace latfold
