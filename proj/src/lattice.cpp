#include "latfold/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace latfold {

namespace {

// Lower-triangular row-style Hermite normal form. Row operations only, so the
// row span (the lattice) is preserved; diagonal entries positive, entries
// below the diagonal reduced into [0, diag).
Mat hermite_normal_form(const Mat& gen) {
  Mat h = gen;
  int n = h.n;
  for (int j = n - 1; j >= 0; --j) {
    int piv = -1;
    for (int i = j; i >= 0; --i)
      if (h.a[i][j] != 0) { piv = i; break; }
    require(piv >= 0, Errc::bad_lattice, "generator matrix is singular");
    std::swap(h.a[piv], h.a[j]);
    for (int i = 0; i < j; ++i) {
      while (h.a[i][j] != 0) {
        i64 q = h.a[j][j] / h.a[i][j];
        for (int k = 0; k <= j; ++k) h.a[j][k] -= q * h.a[i][k];
        std::swap(h.a[i], h.a[j]);
      }
    }
    if (h.a[j][j] < 0)
      for (int k = 0; k <= j; ++k) h.a[j][k] = -h.a[j][k];
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      i64 q = floordiv(h.a[i][j], h.a[j][j]);
      if (q != 0)
        for (int k = 0; k <= j; ++k) h.a[i][k] -= q * h.a[j][k];
    }
  }
  return h;
}

}  // namespace

Lattice Lattice::of(const Mat& gen) {
  Lattice lat;
  lat.gen_ = gen;
  i64 d = gen.det();
  require(d != 0, Errc::bad_lattice, "generator matrix is singular");
  lat.volume_ = std::llabs(d);
  lat.hnf_ = hermite_normal_form(gen);
  i64 diag = 1;
  for (int i = 0; i < gen.n; ++i) {
    lat.stride_[i] = diag;
    diag *= lat.hnf_.a[i][i];
  }
  require(diag == lat.volume_, Errc::internal_inconsistency,
          "normal form diagonal does not match volume");
  return lat;
}

Point Lattice::reduce(Point p) const {
  require(p.dim == dim(), Errc::dim_mismatch, "point dimension does not match lattice");
  for (int i = dim() - 1; i >= 0; --i) {
    i64 q = floordiv(p.c[i], hnf_.a[i][i]);
    if (q != 0)
      for (int k = 0; k <= i; ++k) p.c[k] -= q * hnf_.a[i][k];
  }
  return p;
}

i64 Lattice::coset_index(const Point& p) const {
  Point r = reduce(p);
  i64 idx = 0;
  for (int i = 0; i < dim(); ++i) idx += stride_[i] * r.c[i];
  return idx;
}

Point Lattice::coset_rep(i64 index) const {
  require(index >= 0 && index < volume_, Errc::bad_input, "coset index out of range");
  Point p(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    p.c[i] = index / stride_[i];
    index %= stride_[i];
  }
  return p;
}

TilingCheck verify_tiling(const Lattice& lat, const Shape& s) {
  TilingCheck out;
  if (lat.dim() != s.dim) {
    out.reason = "lattice and shape dimensions differ";
    return out;
  }
  if (lat.volume() != static_cast<i64>(s.points.size())) {
    out.reason = "lattice volume " + std::to_string(lat.volume()) +
                 " does not equal shape size " + std::to_string(s.points.size());
    return out;
  }
  std::vector<int> seen(static_cast<size_t>(lat.volume()), -1);
  for (size_t i = 0; i < s.points.size(); ++i) {
    i64 idx = lat.coset_index(s.points[i]);
    if (seen[idx] >= 0) {
      out.reason = "shape points " + to_string(s.points[seen[idx]]) + " and " +
                   to_string(s.points[i]) + " lie in the same lattice coset";
      out.collision = {s.points[seen[idx]], s.points[i]};
      return out;
    }
    seen[idx] = static_cast<int>(i);
  }
  out.ok = true;
  return out;
}

Tiling Tiling::of(Lattice lat, Shape s) {
  TilingCheck chk = verify_tiling(lat, s);
  require(chk.ok, Errc::not_a_tiling, chk.reason);
  std::vector<Point> cells(static_cast<size_t>(lat.volume()));
  for (const Point& p : s.points) cells[lat.coset_index(p)] = p;
  return Tiling(std::move(lat), std::move(s), std::move(cells));
}

Point Tiling::cell_of(const Point& p) const {
  return cell_by_coset_[static_cast<size_t>(lat_.coset_index(p))];
}

}  // namespace latfold
