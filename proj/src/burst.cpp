#include "latfold/burst.hpp"

#include <algorithm>

namespace latfold {

namespace {

int smallest_degree(i64 n) {
  int m = 1;
  while (((i64{1} << m) - 1) < n) ++m;
  return m;
}

int mixing_rows(int D) {
  int d = 0;
  while ((1 << d) < D) ++d;
  return d;
}

i64 bit_parity(i64 v) { return mod_floor(v, 2); }

// extended Euclid inverse; m >= 1, gcd(x, m) must be 1
i64 mod_inverse_checked(i64 x, i64 m) {
  if (m == 1) return 0;
  i64 a = mod_floor(x, m), b = m;
  i64 u0 = 1, u1 = 0;
  while (b != 0) {
    i64 q = a / b;
    a -= q * b;
    std::swap(a, b);
    u0 -= q * u1;
    std::swap(u0, u1);
  }
  require(a == 1, Errc::internal_inconsistency, "inverse of a non-unit");
  return mod_floor(u0, m);
}

// lexicographically least coefficient vector a in [0,N)^D with
// sum a_i * delta_i == 1 (mod N) and p -> sum a_i p_i mod N injective on the
// given points; the last nonzero-delta slot is solved by linear congruence
// so only the remaining coordinates are scanned
std::optional<std::vector<i64>> find_exponent_map(const std::vector<Point>& pts,
                                                  const Point& delta, i64 N) {
  int D = delta.dim;
  std::vector<i64> a(static_cast<size_t>(D), 0);
  std::vector<char> seen(static_cast<size_t>(N));
  auto injective = [&](const std::vector<i64>& coeff) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const Point& p : pts) {
      i128 v = 0;
      for (int i = 0; i < D; ++i) v += static_cast<i128>(coeff[i]) * p.c[i];
      i64 r = checked_narrow(v % N, "exponent");
      if (r < 0) r += N;
      if (seen[static_cast<size_t>(r)]) return false;
      seen[static_cast<size_t>(r)] = 1;
    }
    return true;
  };

  int solve_at = -1;
  for (int i = D - 1; i >= 0; --i)
    if (mod_floor(delta.c[i], N) != 0) {
      solve_at = i;
      break;
    }
  require(solve_at >= 0, Errc::bad_input, "direction vanishes modulo the group order");

  i64 dd = mod_floor(delta.c[solve_at], N);
  i64 g = std::gcd(dd, N);

  // depth-first scan of the free coordinates in lex order
  std::function<std::optional<std::vector<i64>>(int)> scan =
      [&](int pos) -> std::optional<std::vector<i64>> {
    if (pos == D) {
      i64 r = 1;
      for (int i = 0; i < D; ++i)
        if (i != solve_at) r = mod_floor(r - a[static_cast<size_t>(i)] * delta.c[i], N);
      if (r % g != 0) return std::nullopt;
      // all solutions of a*dd == r (mod N), increasing
      i64 n2 = N / g;
      i64 base = mod_floor((r / g) * mod_inverse_checked(dd / g, n2), n2);
      for (i64 s = base; s < N; s += n2) {
        a[static_cast<size_t>(solve_at)] = s;
        if (injective(a)) return a;
      }
      return std::nullopt;
    }
    if (pos == solve_at) return scan(pos + 1);
    for (i64 v = 0; v < N; ++v) {
      a[static_cast<size_t>(pos)] = v;
      if (auto got = scan(pos + 1)) return got;
    }
    return std::nullopt;
  };
  return scan(0);
}

}  // namespace

BurstCode BurstCode::of_box(const std::vector<i64>& dims) {
  require(!dims.empty() && dims.size() <= static_cast<size_t>(kMaxDim), Errc::bad_input,
          "box rank must be between 1 and " + std::to_string(kMaxDim));
  i128 total = 1;
  for (i64 n : dims) {
    require(n >= 1, Errc::bad_input, "box extents must be positive");
    total *= n;
  }
  require(total <= ((i64{1} << 24) - 1), Errc::shape_too_large,
          "box needs a field degree above 24");
  i64 n = checked_narrow(total, "box size");
  int m = smallest_degree(n);

  BurstCode code(GaloisField::make(2, m));
  code.D_ = static_cast<int>(dims.size());
  code.m_ = m;
  code.d_ = mixing_rows(code.D_);
  code.dims_ = dims;
  code.delta_ = Point::zero(code.D_);

  code.step_.assign(dims.size(), 1);
  for (int j = code.D_ - 2; j >= 0; --j)
    code.step_[static_cast<size_t>(j)] = code.step_[static_cast<size_t>(j) + 1] * dims[static_cast<size_t>(j) + 1];

  code.cells_.reserve(static_cast<size_t>(n));
  Point p = Point::zero(code.D_);
  while (true) {
    code.cells_.push_back(p);
    i64 e = 0;
    for (int j = 0; j < code.D_; ++j) e += p.c[j] * code.step_[static_cast<size_t>(j)];
    code.exponent_.push_back(e);
    int axis = code.D_ - 1;
    while (axis >= 0) {
      if (++p.c[axis] < dims[static_cast<size_t>(axis)]) break;
      p.c[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }

  code.assemble();
  return code;
}

BurstCode BurstCode::of_shape(const Lattice& lat, const Shape& s, const Point& delta) {
  Tiling t = Tiling::of(lat, s);
  require(is_folding_bruteforce(t, delta), Errc::not_a_folding,
          "direction " + to_string(delta) + " does not fold this tiling");
  i64 n = static_cast<i64>(s.points.size());
  require(n <= ((i64{1} << 24) - 1), Errc::shape_too_large,
          "shape needs a field degree above 24");
  int m = smallest_degree(n);
  i64 N = (i64{1} << m) - 1;

  BurstCode code(GaloisField::make(2, m));
  code.D_ = s.dim;
  code.m_ = m;
  code.d_ = mixing_rows(code.D_);
  code.shape_ = s;
  code.lat_ = lat;
  code.delta_ = delta;
  code.cells_ = s.points;

  if (N == n) {
    Coloring col = Coloring::of(std::move(t), delta);
    for (const Point& p : s.points) code.exponent_.push_back(col.color(p));
    for (int j = 0; j < code.D_; ++j)
      code.step_.push_back(col.color(Point::unit(code.D_, j)));
  } else {
    require(static_cast<i128>(N) * N <= (i64{1} << 26), Errc::shape_too_large,
            "padding search space too large");
    auto phi = find_exponent_map(s.points, delta, N);
    require(phi.has_value(), Errc::params_not_admissible,
            "no exponent homomorphism separates the shape cells");
    code.step_ = *phi;
    std::vector<char> used(static_cast<size_t>(N));
    for (const Point& p : s.points) {
      i128 v = 0;
      for (int i = 0; i < code.D_; ++i) v += static_cast<i128>(code.step_[static_cast<size_t>(i)]) * p.c[i];
      i64 e = mod_floor(checked_narrow(v % N + N, "exponent"), N);
      code.exponent_.push_back(e);
      used[static_cast<size_t>(e)] = 1;
    }
    for (i64 rho = 0; rho < N; ++rho)
      if (!used[static_cast<size_t>(rho)]) code.padding_.push_back(delta * rho);
  }

  code.assemble();
  return code;
}

void BurstCode::assemble() {
  size_t n = cells_.size();
  column_.resize(n);
  for (size_t k = 0; k < n; ++k) {
    const Point& p = cells_[k];
    i64 col = 1;
    for (int r = 0; r < d_; ++r) {
      i64 bit = 0;
      for (int j = 0; j < D_; ++j)
        if ((j >> r) & 1) bit ^= bit_parity(p.c[j]);
      col |= bit << (1 + r);
    }
    col |= field_.exp(exponent_[k]) << (1 + d_);
    column_[k] = col;
    cell_by_exponent_.emplace(exponent_[k], k);
    cell_by_point_.emplace(p, k);
  }
  require(cell_by_exponent_.size() == n, Errc::internal_inconsistency,
          "cell exponents must be distinct");
  if (n * static_cast<size_t>(D_) <= (1u << 18)) check_invariants();
}

std::optional<size_t> BurstCode::cell_index(const Point& p) const {
  auto it = cell_by_point_.find(p);
  if (it == cell_by_point_.end()) return std::nullopt;
  return it->second;
}

i64 BurstCode::syndrome(const std::vector<uint8_t>& word) const {
  require(word.size() == cells_.size(), Errc::dim_mismatch,
          "word has " + std::to_string(word.size()) + " bits, code has " +
              std::to_string(cells_.size()) + " cells");
  i64 s = 0;
  for (size_t k = 0; k < word.size(); ++k)
    if (word[k]) s ^= column_[k];
  return s;
}

BurstDecodeResult BurstCode::correct_2burst(const std::vector<uint8_t>& received) const {
  i64 s = syndrome(received);
  BurstDecodeResult out;
  out.corrected = received;
  if (s == 0) return out;

  i64 mask_d = (i64{1} << d_) - 1;
  i64 sa = (s >> 1) & mask_d;
  i64 sf = s >> (1 + d_);
  require(sf != 0, Errc::uncorrectable_pattern, "syndrome has no field part");

  if (s & 1) {
    i64 e = field_.log(sf);
    auto it = cell_by_exponent_.find(e);
    require(it != cell_by_exponent_.end() && column_[it->second] == s,
            Errc::uncorrectable_pattern, "no single cell matches the syndrome");
    out.corrected[it->second] ^= 1;
    out.error_cells.push_back(it->second);
    return out;
  }

  // the mixing block of axis j is the binary encoding of j
  require(sa < D_, Errc::uncorrectable_pattern, "mixing block matches no axis");
  int axis = static_cast<int>(sa);

  i64 denom = field_.exp(step_[static_cast<size_t>(axis)]) ^ i64{1};
  require(denom != 0, Errc::uncorrectable_pattern,
          "adjacent cells on this axis are not separable");
  i64 e1 = field_.log(field_.mul(sf, field_.inv(denom)));
  auto it = cell_by_exponent_.find(e1);
  require(it != cell_by_exponent_.end(), Errc::uncorrectable_pattern,
          "no base cell matches the syndrome");
  size_t c1 = it->second;
  auto c2 = cell_index(cells_[c1] + Point::unit(D_, axis));
  require(c2.has_value() && (column_[c1] ^ column_[*c2]) == s, Errc::uncorrectable_pattern,
          "no adjacent pair matches the syndrome");
  out.corrected[c1] ^= 1;
  out.corrected[*c2] ^= 1;
  out.error_cells.push_back(std::min(c1, *c2));
  out.error_cells.push_back(std::max(c1, *c2));
  return out;
}

std::vector<std::vector<uint8_t>> BurstCode::nullspace_basis() const {
  size_t n = cells_.size();
  require(n <= 4096, Errc::too_large, "null space basis only at small sizes");
  int rows = redundancy();

  // row-reduce H: rows are the redundancy bits, columns are cells
  std::vector<std::vector<uint64_t>> h(static_cast<size_t>(rows),
                                       std::vector<uint64_t>((n + 63) / 64, 0));
  for (size_t k = 0; k < n; ++k)
    for (int r = 0; r < rows; ++r)
      if ((column_[k] >> r) & 1) h[static_cast<size_t>(r)][k / 64] |= uint64_t{1} << (k % 64);

  std::vector<int> pivot_of_col(n, -1);
  int row = 0;
  for (size_t c = 0; c < n && row < rows; ++c) {
    int sel = -1;
    for (int r = row; r < rows; ++r)
      if ((h[static_cast<size_t>(r)][c / 64] >> (c % 64)) & 1) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(h[static_cast<size_t>(sel)], h[static_cast<size_t>(row)]);
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      if ((h[static_cast<size_t>(r)][c / 64] >> (c % 64)) & 1)
        for (size_t w = 0; w < h[0].size(); ++w) h[static_cast<size_t>(r)][w] ^= h[static_cast<size_t>(row)][w];
    }
    pivot_of_col[c] = row;
    ++row;
  }

  std::vector<std::vector<uint8_t>> basis;
  for (size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<uint8_t> v(n, 0);
    v[c] = 1;
    for (size_t c2 = 0; c2 < n; ++c2) {
      int r = pivot_of_col[c2];
      if (r < 0) continue;
      if ((h[static_cast<size_t>(r)][c / 64] >> (c % 64)) & 1) v[c2] = 1;
    }
    basis.push_back(std::move(v));
  }
  for (const auto& v : basis)
    require(syndrome(v) == 0, Errc::internal_inconsistency, "basis vector not in the code");
  return basis;
}

void BurstCode::check_invariants(
    const std::function<bool(const Point&, const Point&)>& adjacent) const {
  size_t n = cells_.size();
  Errc breach = dims_.empty() ? Errc::params_not_admissible : Errc::internal_inconsistency;

  std::unordered_map<i64, size_t> singles;
  for (size_t k = 0; k < n; ++k) {
    auto [it, fresh] = singles.emplace(column_[k], k);
    require(fresh, breach, "columns of cells " + to_string(cells_[it->second]) + " and " +
                               to_string(cells_[k]) + " coincide");
  }

  auto check_pair = [&](size_t a, size_t b, std::unordered_map<i64, std::pair<size_t, size_t>>& seen) {
    i64 x = column_[a] ^ column_[b];
    require(x != 0, breach, "adjacent cells " + to_string(cells_[a]) + " and " +
                                to_string(cells_[b]) + " cancel");
    require(!singles.count(x), breach,
            "pair " + to_string(cells_[a]) + "+" + to_string(cells_[b]) +
                " mimics a single cell");
    auto [it, fresh] = seen.emplace(x, std::make_pair(a, b));
    require(fresh, breach, "pairs " + to_string(cells_[it->second.first]) + "+" +
                               to_string(cells_[it->second.second]) + " and " +
                               to_string(cells_[a]) + "+" + to_string(cells_[b]) +
                               " share a syndrome");
  };

  std::unordered_map<i64, std::pair<size_t, size_t>> pair_seen;
  if (!adjacent) {
    for (size_t k = 0; k < n; ++k)
      for (int j = 0; j < D_; ++j) {
        auto other = cell_index(cells_[k] + Point::unit(D_, j));
        if (other) check_pair(k, *other, pair_seen);
      }
  } else {
    require(static_cast<i128>(n) * n <= (1 << 24), Errc::too_large,
            "custom adjacency sweep too large");
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (adjacent(cells_[a], cells_[b])) check_pair(a, b, pair_seen);
  }
}

bool BurstCode::is_legal_burst(const BurstError& e) const {
  if (e.cells.empty() || e.cells.size() > 2) return false;
  for (const Point& p : e.cells)
    if (!cell_index(p)) return false;
  if (e.cells.size() == 2) {
    Point diff = e.cells[1] - e.cells[0];
    int nz = 0;
    for (int i = 0; i < diff.dim; ++i)
      if (diff.c[i] != 0) {
        ++nz;
        if (diff.c[i] != 1 && diff.c[i] != -1) return false;
      }
    if (nz != 1) return false;
  }
  return true;
}

}  // namespace latfold
