#include "latfold/folding.hpp"

#include "latfold/shapes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace latfold {

i64 folded_row_length(const Lattice& lat, const Point& delta) {
  require(delta.dim == lat.dim(), Errc::dim_mismatch, "direction dimension mismatch");
  require(!delta.is_zero(), Errc::bad_input, "direction must be nonzero");
  Point cur = lat.reduce(delta);
  i64 len = 1;
  while (!cur.is_zero()) {
    cur = lat.reduce(cur + delta);
    ++len;
    require(len <= lat.volume(), Errc::internal_inconsistency,
            "walk did not return to the origin within the volume");
  }
  return len;
}

bool is_folding_bruteforce(const Lattice& lat, const Point& delta) {
  return folded_row_length(lat, delta) == lat.volume();
}

bool is_folding_bruteforce(const Tiling& t, const Point& delta) {
  return is_folding_bruteforce(t.lattice(), delta);
}

std::vector<Point> folded_row(const Tiling& t, const Point& delta) {
  require(delta.dim == t.lattice().dim(), Errc::dim_mismatch, "direction dimension mismatch");
  require(!delta.is_zero(), Errc::bad_input, "direction must be nonzero");
  std::vector<Point> row;
  Point cur = Point::zero(delta.dim);
  do {
    row.push_back(cur);
    cur = t.cell_of(cur + delta);
    require(static_cast<i64>(row.size()) <= t.size(), Errc::internal_inconsistency,
            "walk did not return to the origin within the volume");
  } while (!cur.is_zero());
  return row;
}

std::vector<i64> folded_indices(const Tiling& t, const Point& delta) {
  const auto& pts = t.shape().points;
  std::vector<i64> idx(pts.size(), -1);
  std::vector<Point> row = folded_row(t, delta);
  for (size_t k = 0; k < row.size(); ++k) {
    auto it = std::lower_bound(pts.begin(), pts.end(), row[k]);
    idx[static_cast<size_t>(it - pts.begin())] = static_cast<i64>(k);
  }
  return idx;
}

bool is_folding_2d(const Lattice& lat, const Point& delta) {
  require(lat.dim() == 2, Errc::dim_mismatch, "closed-form 2D predicate needs a 2D lattice");
  require(delta.dim == 2, Errc::dim_mismatch, "direction dimension mismatch");
  require(!delta.is_zero(), Errc::bad_input, "direction must be nonzero");
  const Mat& g = lat.gen();
  i64 v11 = g.at(0, 0), v12 = g.at(0, 1);
  i64 v21 = g.at(1, 0), v22 = g.at(1, 1);
  i64 V = lat.volume();
  i64 d1 = delta.x(), d2 = delta.y();
  // a direction and its negation fold identically
  if (d1 < 0 || (d1 == 0 && d2 < 0)) { d1 = -d1; d2 = -d2; }
  if (d2 == 0) return std::gcd(v12, v22) == 1 && std::gcd(d1, V) == 1;
  if (d1 == 0) return std::gcd(v11, v21) == 1 && std::gcd(d2, V) == 1;
  if (d2 > 0) {
    i64 tau = std::gcd(d1, d2);
    i64 a = d1 * v22 - d2 * v21;
    i64 b = d2 * v11 - d1 * v12;
    return std::gcd(std::llabs(a), std::llabs(b)) == tau && std::gcd(tau, V) == 1;
  }
  i64 m2 = -d2;
  i64 tau = std::gcd(d1, m2);
  i64 a = d1 * v22 + m2 * v21;
  i64 b = d1 * v12 + m2 * v11;
  return std::gcd(std::llabs(a), std::llabs(b)) == tau && std::gcd(tau, V) == 1;
}

namespace {

i64 pow_i64(i64 base, int e) {
  i128 r = 1;
  while (e-- > 0) r *= base;
  return checked_narrow(r, "power");
}

}  // namespace

FoldingCertificate is_folding_ddim(const Lattice& lat, const Point& delta) {
  int D = lat.dim();
  require(delta.dim == D, Errc::dim_mismatch, "direction dimension mismatch");
  require(!delta.is_zero(), Errc::bad_input, "direction must be nonzero");

  FoldingCertificate cert;
  cert.volume = lat.volume();

  // order coordinates: positive direction entries, then negative, then zero
  std::vector<int> perm;
  for (int i = 0; i < D; ++i)
    if (delta[i] > 0) perm.push_back(i);
  cert.ell1 = static_cast<int>(perm.size());
  for (int i = 0; i < D; ++i)
    if (delta[i] < 0) perm.push_back(i);
  cert.ell2 = static_cast<int>(perm.size()) - cert.ell1;
  for (int i = 0; i < D; ++i)
    if (delta[i] == 0) perm.push_back(i);
  // the analysis is invariant under negating the direction; normalize so the
  // positive block is nonempty (the negative block is already first in perm)
  bool negated = false;
  if (cert.ell1 == 0) {
    negated = true;
    std::swap(cert.ell1, cert.ell2);
  }
  int nz = cert.ell1 + cert.ell2;

  std::vector<i64> m(D);  // direction magnitudes in permuted order
  for (int r = 0; r < D; ++r) m[r] = std::llabs(delta[perm[r]]);
  i64 tau = 0;
  for (int r = 0; r < nz; ++r) tau = std::gcd(tau, m[r]);
  cert.tau = tau;
  cert.tau_coprime = std::gcd(tau, cert.volume) == 1;

  // (D-1) x D system matrix: row r-1 (for permuted coordinate r = 1..D-1),
  // column j for generator row j
  const Mat& g = lat.gen();
  auto v = [&](int j, int r) { return g.at(j, perm[r]); };  // row j, permuted coord r
  std::vector<std::vector<i64>> H(static_cast<size_t>(D - 1), std::vector<i64>(D));
  for (int r = 1; r < D; ++r) {
    for (int j = 0; j < D; ++j) {
      i64 u;
      if (r < cert.ell1) {
        u = (m[0] * v(j, r) - m[r] * v(j, 0)) / tau;
      } else if (r < nz) {
        u = (m[0] * v(j, r) + m[r] * v(j, 0)) / tau;
      } else {
        u = v(j, r);
      }
      H[r - 1][j] = u;
    }
  }

  // alpha_k = (-1)^(k-1) * m1 * tau^(nz-1) * det(H without column k) / m1^(nz-1)
  i64 m1pow = pow_i64(m[0], nz - 1);
  i64 taupow = pow_i64(tau, nz - 1);
  cert.alpha.resize(D);
  for (int k = 0; k < D; ++k) {
    std::vector<std::vector<i64>> Hk(static_cast<size_t>(D - 1),
                                     std::vector<i64>(static_cast<size_t>(D - 1)));
    for (int r = 0; r < D - 1; ++r) {
      int cc = 0;
      for (int j = 0; j < D; ++j)
        if (j != k) Hk[r][cc++] = H[r][j];
    }
    i128 num = static_cast<i128>(m[0]) * taupow * det_exact(Hk);
    if (k % 2 == 1) num = -num;
    require(num % m1pow == 0, Errc::internal_inconsistency,
            "coefficient formula did not divide exactly");
    cert.alpha[k] = checked_narrow(num / m1pow, "folding coefficient");
  }

  // cross-check: sum_j alpha_j * row_j(G) must equal volume * delta (up to a
  // global sign shared by all coefficients)
  Point target = negated ? -delta : delta;
  for (int sign = 0; sign < 2; ++sign) {
    bool match = true;
    for (int r = 0; r < D && match; ++r) {
      i128 acc = 0;
      for (int j = 0; j < D; ++j) acc += static_cast<i128>(cert.alpha[j]) * g.at(j, r);
      if (acc != static_cast<i128>(cert.volume) * target[r]) match = false;
    }
    if (match) break;
    if (sign == 0) {
      for (auto& a : cert.alpha) a = -a;
    } else {
      fail(Errc::internal_inconsistency,
           "coefficients do not solve the defining linear system");
    }
  }

  i64 ag = 0;
  for (i64 a : cert.alpha) ag = std::gcd(ag, std::llabs(a));
  require(ag % tau == 0, Errc::internal_inconsistency,
          "coefficient gcd is not a multiple of tau");
  cert.alpha_gcd = ag / tau;
  cert.folds = (cert.alpha_gcd == 1) && cert.tau_coprime;
  if (!cert.folds) {
    cert.reason = !cert.tau_coprime
                      ? "direction gcd shares a factor with the volume"
                      : "normalized coefficients share a common factor";
  }
  return cert;
}

Coloring Coloring::of(Tiling t, const Point& delta) {
  std::vector<Point> row = folded_row(t, delta);
  require(static_cast<i64>(row.size()) == t.size(), Errc::not_a_folding,
          "walk returns to the origin after " + std::to_string(row.size()) +
              " of " + std::to_string(t.size()) + " cells");
  std::vector<i64> colors(row.size());
  for (size_t k = 0; k < row.size(); ++k)
    colors[static_cast<size_t>(t.lattice().coset_index(row[k]))] = static_cast<i64>(k);
  return Coloring(std::move(t), delta, std::move(row), std::move(colors));
}

FoldingEnumeration enumerate_foldings(const Tiling& t) {
  FoldingEnumeration out;
  std::map<std::vector<Point>, size_t> seen;
  for (const Point& p : t.shape().points) {
    if (p.is_zero()) continue;
    ++out.directions_tested;
    if (!is_folding_bruteforce(t.lattice(), p)) continue;
    ++out.directions_folding;
    std::vector<Point> row = folded_row(t, p);
    // the reversed walk visits the same cells backward but still starts at
    // the origin
    std::vector<Point> rev(row.size());
    rev[0] = row[0];
    for (size_t k = 1; k < row.size(); ++k) rev[k] = row[row.size() - k];
    const std::vector<Point>& key = std::min(row, rev);
    if (seen.emplace(key, out.classes.size()).second)
      out.classes.push_back({p, std::move(row)});
  }
  return out;
}

i64 euler_phi(i64 n) {
  require(n >= 1, Errc::bad_input, "phi needs a positive argument");
  i64 result = n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

i64 mod_inverse(i64 a, i64 n) {
  i64 t = 0, newt = 1, r = n, newr = mod_floor(a, n);
  while (newr != 0) {
    i64 q = r / newr;
    std::tie(t, newt) = std::make_pair(newt, t - q * newt);
    std::tie(r, newr) = std::make_pair(newr, r - q * newr);
  }
  require(r == 1, Errc::bad_input, "value is not invertible modulo " + std::to_string(n));
  return mod_floor(t, n);
}

}  // namespace

ClassicFold classic_fold(ClassicKind kind, i64 r, i64 t) {
  require(r >= 1 && t >= 1, Errc::bad_input, "array sides must be positive");
  switch (kind) {
    case ClassicKind::diagonal: {
      require(std::gcd(r, t) == 1, Errc::not_a_folding,
              "diagonal folding needs coprime side lengths, gcd(" + std::to_string(r) +
                  "," + std::to_string(t) + ") > 1");
      Lattice lat = Lattice::from_rows({{t, 0}, {0, r}});
      return {lat, rect_shape(r, t), Point{1, 1}};
    }
    case ClassicKind::row_major: {
      Lattice lat = Lattice::from_rows({{t, -1}, {0, r}});
      return {lat, rect_shape(r, t), Point{1, 0}};
    }
    case ClassicKind::coloring_diag: {
      // r x t play the roles of width w and height h; cells are indexed by
      // (w-1)x + wy modulo wh-1
      i64 w = r, h = t;
      i64 n = w * h - 1;
      require(n >= 2, Errc::bad_input, "window must have at least 3 cells");
      i64 t0 = mod_floor(-(w - 1) * mod_inverse(w, n), n);
      Lattice lat = Lattice::from_rows({{1, t0}, {0, n}});
      std::vector<Point> pts;
      for (i64 y = 0; y < n; ++y) pts.push_back({0, y});
      return {lat, Shape::of(2, std::move(pts)), Point{-1, 1}};
    }
  }
  fail(Errc::bad_input, "unknown classic folding kind");
}

}  // namespace latfold
