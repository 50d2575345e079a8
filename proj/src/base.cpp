#include "latfold/base.hpp"

#include <limits>
#include <sstream>

namespace latfold {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_input: return "bad input";
    case Errc::dim_mismatch: return "dimension mismatch";
    case Errc::bad_lattice: return "bad lattice";
    case Errc::not_a_tiling: return "not a tiling";
    case Errc::not_a_folding: return "not a folding";
    case Errc::morph_not_applicable: return "morph not applicable";
    case Errc::params_not_admissible: return "parameters not admissible";
    case Errc::shape_too_large: return "shape too large";
    case Errc::uncorrectable_pattern: return "uncorrectable pattern";
    case Errc::too_large: return "instance too large";
    case Errc::internal_inconsistency: return "internal inconsistency";
  }
  return "error";
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.dim; ++i) {
    if (i) os << ',';
    os << p.c[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.n; ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < m.n; ++j) {
      if (j) os << ',';
      os << m.a[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat Mat::from_rows(const std::vector<std::vector<i64>>& rows) {
  require(!rows.empty() && rows.size() <= kMaxDim, Errc::dim_mismatch,
          "matrix must have between 1 and " + std::to_string(kMaxDim) + " rows");
  Mat m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n; ++i) {
    require(static_cast<int>(rows[i].size()) == m.n, Errc::dim_mismatch,
            "matrix must be square");
    for (int j = 0; j < m.n; ++j) m.a[i][j] = rows[i][j];
  }
  return m;
}

Mat Mat::identity(int size) {
  Mat m(size);
  for (int i = 0; i < size; ++i) m.a[i][i] = 1;
  return m;
}

std::vector<std::vector<i64>> Mat::to_rows() const {
  std::vector<std::vector<i64>> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = std::vector<i64>(a[i].begin(), a[i].begin() + n);
  return rows;
}

i64 checked_narrow(i128 v, const char* what) {
  require(v <= static_cast<i128>(std::numeric_limits<i64>::max()) &&
              v >= static_cast<i128>(std::numeric_limits<i64>::min()),
          Errc::too_large, std::string(what) + " overflows 64-bit range");
  return static_cast<i64>(v);
}

// Bareiss fraction-free elimination; every division below is exact.
i64 det_exact(const std::vector<std::vector<i64>>& rows) {
  size_t r = rows.size();
  if (r == 0) return 1;
  std::vector<std::vector<i128>> a(r, std::vector<i128>(r));
  for (size_t i = 0; i < r; ++i) {
    require(rows[i].size() == r, Errc::dim_mismatch, "matrix must be square");
    for (size_t j = 0; j < r; ++j) a[i][j] = rows[i][j];
  }
  i128 prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < r; ++k) {
    if (a[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < r && a[piv][k] == 0) ++piv;
      if (piv == r) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < r; ++i) {
      for (size_t j = k + 1; j < r; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return checked_narrow(sign * a[r - 1][r - 1], "determinant");
}

i64 Mat::det() const {
  return det_exact(to_rows());
}

}  // namespace latfold
