#include "latfold/prarray.hpp"

#include <algorithm>
#include <string>

namespace latfold {

namespace {

std::string row_string(const std::vector<uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
  return s;
}

std::string rotate_left(const std::string& s, i64 t) {
  i64 n = static_cast<i64>(s.size());
  t = mod_floor(t, n);
  return s.substr(static_cast<size_t>(t)) + s.substr(0, static_cast<size_t>(t));
}

}  // namespace

FoldedArray fold_bits(Coloring col, const std::vector<uint8_t>& bits) {
  require(static_cast<i64>(bits.size()) == col.period(), Errc::bad_input,
          "sequence length " + std::to_string(bits.size()) +
              " must equal the cell count " + std::to_string(col.period()));
  FoldedArray fa{std::move(col), {}, {}};
  fa.row_bits = bits;
  const Shape& s = fa.shape();
  fa.bits.reserve(s.points.size());
  for (const Point& p : s.points)
    fa.bits.push_back(bits[static_cast<size_t>(fa.coloring.color(p))]);
  return fa;
}

FoldedArray fold_bits(const Lattice& lat, const Shape& s, const Point& delta,
                      const std::vector<uint8_t>& bits) {
  return fold_bits(Coloring::of(Tiling::of(lat, s), delta), bits);
}

FoldedArray fold_msequence(const Lattice& lat, const Shape& s, const Point& delta,
                           const MSequence& m) {
  return fold_bits(lat, s, delta, m.bits);
}

FoldedArray cyclic_shift(const FoldedArray& fa, i64 t) {
  i64 n = fa.n();
  std::vector<uint8_t> shifted(fa.row_bits.size());
  for (i64 i = 0; i < n; ++i)
    shifted[static_cast<size_t>(i)] = fa.row_bits[static_cast<size_t>(mod_floor(i + t, n))];
  return fold_bits(fa.coloring, shifted);
}

ArrayPropertyReport property_report(const FoldedArray& fa) {
  ArrayPropertyReport rep;
  rep.n = fa.n();
  require(rep.n <= 16383, Errc::too_large, "property battery is quadratic in the cell count");
  std::string s = row_string(fa.row_bits);
  i64 n = rep.n;

  rep.ones = std::count(s.begin(), s.end(), '1');
  rep.zeros = n - rep.ones;
  rep.balance_ok = (rep.ones == (n + 1) / 2) && (rep.zeros == (n - 1) / 2);
  if (!rep.balance_ok)
    rep.detail = "balance: " + std::to_string(rep.ones) + " ones, " +
                 std::to_string(rep.zeros) + " zeroes";

  std::string doubled = s + s;
  rep.shift_add_ok = true;
  rep.autocorr_ok = true;
  for (i64 t = 1; t < n; ++t) {
    std::string r = rotate_left(s, t);
    std::string x(s.size(), '0');
    i64 weight = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      x[i] = (s[i] != r[i]) ? '1' : '0';
      weight += (x[i] == '1');
    }
    if (rep.shift_add_ok && doubled.find(x) == std::string::npos) {
      rep.shift_add_ok = false;
      if (rep.detail.empty())
        rep.detail = "shift-and-add: shift " + std::to_string(t) + " leaves the orbit";
    }
    if (rep.autocorr_ok && n - 2 * weight != -1) {
      rep.autocorr_ok = false;
      if (rep.detail.empty())
        rep.detail = "autocorrelation at shift " + std::to_string(t) + " is " +
                     std::to_string(n - 2 * weight);
    }
  }
  return rep;
}

std::vector<std::pair<Point, i64>> planar_autocorrelation(const FoldedArray& fa) {
  const std::vector<Point>& row = fa.coloring.row();
  const Shape& s = fa.shape();
  std::vector<std::pair<Point, i64>> out;
  out.reserve(row.size());
  for (const Point& v : row) {
    i64 acc = 0;
    for (const Point& p : s.points) acc += (fa.at(p) == fa.at(p + v)) ? 1 : -1;
    out.emplace_back(v, acc);
  }
  return out;
}

WindowReport window_property(const FoldedArray& fa, const Shape& window) {
  require(window.dim == fa.shape().dim, Errc::dim_mismatch,
          "window and array dimensions differ");
  i64 n = fa.n();
  int k = static_cast<int>(window.points.size());
  require(k <= 62 && ((i64{1} << k) - 1) == n, Errc::bad_input,
          "window of " + std::to_string(k) + " cells cannot index " + std::to_string(n) +
              " cells");

  WindowReport rep;
  rep.windows = n;
  std::vector<i64> count(static_cast<size_t>(n) + 1, 0);
  std::optional<Point> zero_at;
  const std::vector<Point>& row = fa.coloring.row();
  for (const Point& base : row) {
    i64 key = 0;
    for (int j = 0; j < k; ++j)
      key |= static_cast<i64>(fa.at(base + window.points[static_cast<size_t>(j)])) << j;
    ++count[static_cast<size_t>(key)];
    if (key == 0 && !zero_at) zero_at = base;
  }

  // the verdict is the direct count; zero_window is the shortcut view, which
  // coincides with it whenever the array is shift-and-add closed
  rep.zero_window = count[0] > 0;
  for (i64 v = 1; v <= n; ++v) rep.distinct_nonzero += count[static_cast<size_t>(v)] > 0;
  rep.ok = !rep.zero_window && rep.distinct_nonzero == n;
  if (!rep.ok) {
    if (rep.zero_window)
      rep.detail = "all-zero window at " + to_string(*zero_at);
    else
      rep.detail = "only " + std::to_string(rep.distinct_nonzero) + " of " +
                   std::to_string(n) + " patterns occur";
  }
  return rep;
}

std::vector<Shape> two_row_pentominoes() {
  std::vector<Shape> out;
  // 5-cell subsets of the 2 x 5 box, connected, touching both axes
  for (int mask = 0; mask < (1 << 10); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 5) continue;
    std::vector<Point> pts;
    bool touch_x = false, touch_y = false;
    for (int b = 0; b < 10; ++b)
      if (mask & (1 << b)) {
        i64 x = b % 5, y = b / 5;
        touch_x |= (x == 0);
        touch_y |= (y == 0);
        pts.push_back(Point{x, y});
      }
    if (!touch_x || !touch_y) continue;
    // edge connectivity
    std::vector<int> comp(5, -1);
    std::vector<size_t> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < pts.size(); ++j) {
        if (comp[j] >= 0) continue;
        i64 dx = pts[i].x() - pts[j].x(), dy = pts[i].y() - pts[j].y();
        if (dx * dx + dy * dy == 1) {
          comp[j] = 0;
          stack.push_back(j);
        }
      }
    }
    if (std::count(comp.begin(), comp.end(), 0) != 5) continue;
    out.push_back(Shape::of(2, pts));
  }
  require(out.size() == 19, Errc::internal_inconsistency,
          "expected 19 pentominoes fitting two rows");
  return out;
}

}  // namespace latfold
