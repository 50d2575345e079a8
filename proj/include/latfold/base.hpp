#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace latfold {

using i64 = long long;
using i128 = __int128;

inline constexpr int kMaxDim = 6;

enum class Errc {
  bad_input,
  dim_mismatch,
  bad_lattice,
  not_a_tiling,
  not_a_folding,
  morph_not_applicable,
  params_not_admissible,
  shape_too_large,
  uncorrectable_pattern,
  too_large,
  internal_inconsistency,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// Integer point in Z^dim. Coordinate 0 is x (column), coordinate 1 is y (row,
// increasing upward); higher coordinates follow for dim > 2.
struct Point {
  std::array<i64, kMaxDim> c{};
  int dim = 0;

  Point() = default;
  explicit Point(int d) : dim(d) {
    require(d >= 1 && d <= kMaxDim, Errc::dim_mismatch,
            "dimension must be between 1 and " + std::to_string(kMaxDim));
  }
  Point(std::initializer_list<i64> v) {
    require(v.size() >= 1 && v.size() <= kMaxDim, Errc::dim_mismatch,
            "dimension must be between 1 and " + std::to_string(kMaxDim));
    dim = static_cast<int>(v.size());
    int i = 0;
    for (i64 x : v) c[i++] = x;
  }
  static Point from(const std::vector<i64>& v) {
    require(v.size() >= 1 && v.size() <= kMaxDim, Errc::dim_mismatch,
            "dimension must be between 1 and " + std::to_string(kMaxDim));
    Point p(static_cast<int>(v.size()));
    for (int i = 0; i < p.dim; ++i) p.c[i] = v[i];
    return p;
  }
  static Point zero(int d) { return Point(d); }
  static Point unit(int d, int axis) {
    Point p(d);
    require(axis >= 0 && axis < d, Errc::dim_mismatch, "axis out of range");
    p.c[axis] = 1;
    return p;
  }

  i64& operator[](int i) { return c[i]; }
  i64 operator[](int i) const { return c[i]; }
  i64 x() const { return c[0]; }
  i64 y() const { return c[1]; }

  bool is_zero() const {
    for (int i = 0; i < dim; ++i)
      if (c[i] != 0) return false;
    return true;
  }

  Point operator+(const Point& o) const {
    check_dim(o);
    Point r(dim);
    for (int i = 0; i < dim; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Point operator-(const Point& o) const {
    check_dim(o);
    Point r(dim);
    for (int i = 0; i < dim; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Point operator-() const {
    Point r(dim);
    for (int i = 0; i < dim; ++i) r.c[i] = -c[i];
    return r;
  }
  Point operator*(i64 k) const {
    Point r(dim);
    for (int i = 0; i < dim; ++i) r.c[i] = c[i] * k;
    return r;
  }
  Point& operator+=(const Point& o) { return *this = *this + o; }
  Point& operator-=(const Point& o) { return *this = *this - o; }

  bool operator==(const Point& o) const {
    if (dim != o.dim) return false;
    for (int i = 0; i < dim; ++i)
      if (c[i] != o.c[i]) return false;
    return true;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const {
    check_dim(o);
    for (int i = 0; i < dim; ++i)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }

  std::vector<i64> to_vector() const { return std::vector<i64>(c.begin(), c.begin() + dim); }

 private:
  void check_dim(const Point& o) const {
    require(dim == o.dim, Errc::dim_mismatch, "points have different dimensions");
  }
};

std::string to_string(const Point& p);

struct PointHash {
  size_t operator()(const Point& p) const {
    size_t h = static_cast<size_t>(p.dim) * 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < p.dim; ++i) {
      h ^= static_cast<size_t>(p.c[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Square integer matrix; row i is the i-th basis vector of a lattice.
struct Mat {
  std::array<std::array<i64, kMaxDim>, kMaxDim> a{};
  int n = 0;

  Mat() = default;
  explicit Mat(int size) : n(size) {
    require(size >= 1 && size <= kMaxDim, Errc::dim_mismatch,
            "matrix size must be between 1 and " + std::to_string(kMaxDim));
  }
  static Mat from_rows(const std::vector<std::vector<i64>>& rows);
  static Mat identity(int size);

  i64 at(int i, int j) const { return a[i][j]; }
  i64& at(int i, int j) { return a[i][j]; }
  Point row(int i) const {
    Point p(n);
    for (int j = 0; j < n; ++j) p.c[j] = a[i][j];
    return p;
  }
  void set_row(int i, const Point& p) {
    require(p.dim == n, Errc::dim_mismatch, "row dimension mismatch");
    for (int j = 0; j < n; ++j) a[i][j] = p.c[j];
  }

  i64 det() const;

  bool operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[i][j] != o.a[i][j]) return false;
    return true;
  }

  std::vector<std::vector<i64>> to_rows() const;
};

std::string to_string(const Mat& m);

// floor division, denominator must be positive
inline i64 floordiv(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 mod_floor(i64 a, i64 b) { return a - floordiv(a, b) * b; }

inline i64 gcd_ll(i64 a, i64 b) { return std::gcd(a, b); }

// determinant of an r x r integer matrix given as rows, exact via Bareiss
i64 det_exact(const std::vector<std::vector<i64>>& rows);

i64 checked_narrow(i128 v, const char* what);

}  // namespace latfold
