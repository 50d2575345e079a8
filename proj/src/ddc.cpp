#include "latfold/ddc.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "latfold/shapes.hpp"

namespace latfold {

bool PeriodicPattern::dot_at(const Point& p) const {
  Point w = wrap(p);
  return std::binary_search(dots.begin(), dots.end(), w);
}

Point PeriodicPattern::wrap(const Point& p) const {
  require(p.dim == dim, Errc::dim_mismatch, "point dimension mismatch");
  Point w = p;
  for (int i = 0; i < dim; ++i) w.c[i] = mod_floor(w.c[i], period[i]);
  return w;
}

PeriodicPattern PeriodicPattern::flipped_horizontal() const {
  PeriodicPattern out;
  out.dim = dim;
  out.period = period;
  out.dots.reserve(dots.size());
  for (const Point& d : dots) {
    Point f = d;
    f.c[0] = mod_floor(-f.c[0], period[0]);
    out.dots.push_back(f);
  }
  std::sort(out.dots.begin(), out.dots.end());
  return out;
}

DotPattern fold_dots(const Coloring& col, const B2Set& b) {
  require(b.n == col.period(), Errc::bad_input,
          "set modulus " + std::to_string(b.n) + " must equal the cell count " +
              std::to_string(col.period()));
  std::unordered_set<i64> members(b.elements.begin(), b.elements.end());
  DotPattern out;
  out.shape = col.tiling().shape();
  for (const Point& p : out.shape.points)
    if (members.count(col.color(p))) out.dots.push_back(p);
  require(out.dots.size() == b.elements.size(), Errc::internal_inconsistency,
          "every color appears exactly once per copy");
  return out;
}

DotPattern fold_dots(const Tiling& t, const Point& delta, const B2Set& b) {
  return fold_dots(Coloring::of(t, delta), b);
}

DdcCheck verify_ddc(const std::vector<Point>& dots) {
  DdcCheck out;
  std::unordered_map<Point, std::pair<Point, Point>, PointHash> diffs;
  for (const Point& a : dots) {
    for (const Point& b : dots) {
      if (a == b) continue;
      Point d = b - a;
      auto [it, fresh] = diffs.emplace(d, std::make_pair(a, b));
      if (!fresh) {
        out.reason = "difference " + to_string(d) + " repeats: " +
                     to_string(it->second.first) + "->" + to_string(it->second.second) +
                     " and " + to_string(a) + "->" + to_string(b);
        out.witness = {{it->second.first, it->second.second, a, b}};
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

PeriodicPattern build_periodic(const Coloring& col, const B2Set& b) {
  require(b.n == col.period(), Errc::bad_input,
          "set modulus " + std::to_string(b.n) + " must equal the cell count " +
              std::to_string(col.period()));
  int D = col.tiling().lattice().dim();
  i64 n = col.period();
  i128 cells = 1;
  for (int i = 0; i < D; ++i) cells *= n;
  require(cells <= (1 << 24), Errc::too_large, "period box too large to enumerate");
  std::unordered_set<i64> members(b.elements.begin(), b.elements.end());
  PeriodicPattern out;
  out.dim = D;
  out.period.assign(static_cast<size_t>(D), n);
  Point p(D);
  while (true) {
    if (members.count(col.color(p))) out.dots.push_back(p);
    int axis = 0;
    while (axis < D) {
      if (++p.c[axis] < n) break;
      p.c[axis] = 0;
      ++axis;
    }
    if (axis == D) break;
  }
  std::sort(out.dots.begin(), out.dots.end());
  require(static_cast<i64>(out.dots.size()) ==
              static_cast<i64>(b.elements.size()) * checked_narrow(cells / n, "box"),
          Errc::internal_inconsistency, "each color repeats once per hyper-row");
  return out;
}

DdcCheck verify_periodic_sddc(const PeriodicPattern& pp, const Shape& s, i64 budget) {
  require(pp.dim == s.dim, Errc::dim_mismatch, "pattern and shape dimensions differ");
  i64 work = checked_narrow(static_cast<i128>(pp.box_cells()) *
                                static_cast<i64>(s.points.size()),
                            "verification sweep");
  require(work <= budget, Errc::too_large,
          "sweep needs " + std::to_string(work) + " lookups, budget is " +
              std::to_string(budget));
  DdcCheck out;
  int D = pp.dim;
  std::vector<Point> window;
  Point t(D);
  while (true) {
    window.clear();
    for (const Point& c : s.points)
      if (pp.dot_at(t + c)) window.push_back(t + c);
    DdcCheck w = verify_ddc(window);
    if (!w.ok) {
      out.reason = "window at " + to_string(t) + ": " + w.reason;
      out.witness = w.witness;
      return out;
    }
    int axis = 0;
    while (axis < D) {
      if (++t.c[axis] < pp.period[axis]) break;
      t.c[axis] = 0;
      ++axis;
    }
    if (axis == D) break;
  }
  out.ok = true;
  return out;
}

Placement best_placement(const PeriodicPattern& pp, const Shape& query,
                         bool use_symmetries, i64 budget) {
  require(pp.dim == query.dim, Errc::dim_mismatch, "pattern and query dimensions differ");
  std::vector<Shape> variants =
      (use_symmetries && query.dim == 2) ? grid_symmetries(query) : std::vector<Shape>{query};
  i64 work = checked_narrow(static_cast<i128>(pp.box_cells()) *
                                static_cast<i64>(query.points.size()) *
                                static_cast<i64>(variants.size()),
                            "placement sweep");
  require(work <= budget, Errc::too_large,
          "sweep needs " + std::to_string(work) + " lookups, budget is " +
              std::to_string(budget));
  Placement best;
  best.offset = Point::zero(pp.dim);
  best.count = -1;
  int D = pp.dim;
  for (size_t v = 0; v < variants.size(); ++v) {
    Point t(D);
    while (true) {
      i64 cnt = 0;
      for (const Point& c : variants[v].points)
        if (pp.dot_at(t + c)) ++cnt;
      if (cnt > best.count) {
        best.count = cnt;
        best.offset = t;
        best.symmetry = static_cast<int>(v);
      }
      int axis = 0;
      while (axis < D) {
        if (++t.c[axis] < pp.period[axis]) break;
        t.c[axis] = 0;
        ++axis;
      }
      if (axis == D) break;
    }
  }
  for (const Point& c : variants[static_cast<size_t>(best.symmetry)].points)
    if (pp.dot_at(best.offset + c)) best.dots.push_back(best.offset + c);
  return best;
}

namespace {

struct Split {
  i64 n1, n2;
};

// split total = n1 * n2 whose aspect is closest to n1:n2 = rnum:rden,
// requiring n1 even (or n2 even when n2_even is set); ties go to smaller n1
std::optional<Split> pick_split(i64 total, i64 rnum, i64 rden, bool n2_even) {
  std::optional<Split> best;
  i128 bestscore = 0;
  auto consider = [&](i64 n1) {
    i64 n2 = total / n1;
    if (n2_even ? (n2 % 2 != 0) : (n1 % 2 != 0)) return;
    i128 score = static_cast<i128>(n1) * rden - static_cast<i128>(n2) * rnum;
    if (score < 0) score = -score;
    if (!best || score < bestscore || (score == bestscore && n1 < best->n1)) {
      best = Split{n1, n2};
      bestscore = score;
    }
  };
  for (i64 d = 1; d * d <= total; ++d) {
    if (total % d != 0) continue;
    consider(d);
    consider(total / d);
  }
  return best;
}

}  // namespace

const char* family_name(DdcFamily f) {
  switch (f) {
    case DdcFamily::rectangle: return "rectangle";
    case DdcFamily::corner: return "corner";
    case DdcFamily::flipped_t: return "flipped_t";
  }
  return "unknown";
}

DdcFamily parse_family(const std::string& name) {
  if (name == "rectangle") return DdcFamily::rectangle;
  if (name == "corner") return DdcFamily::corner;
  if (name == "flipped_t" || name == "flippedt") return DdcFamily::flipped_t;
  fail(Errc::bad_input, "unknown family '" + name + "'");
}

FamilyInstance construct_ddc_family(DdcFamily family, const FamilyParams& params) {
  i64 p = params.p;
  require(p >= 3, Errc::params_not_admissible, "p must be a prime power >= 3");
  require(prime_power(p).has_value(), Errc::params_not_admissible,
          std::to_string(p) + " is not a prime power");
  i64 total = p * p - 1;

  i64 n1, n2;
  if (params.n1) {
    n1 = *params.n1;
    require(n1 >= 1 && total % n1 == 0, Errc::params_not_admissible,
            "n1 must divide p^2 - 1 = " + std::to_string(total));
    n2 = total / n1;
  } else {
    // aspect defaults: square-ish for rectangle and flipped T, 1:3 for the
    // corner (its rows count 2*n1 against width about n2/3)
    bool n2_even = (family == DdcFamily::flipped_t);
    i64 rnum = 1, rden = (family == DdcFamily::corner) ? 3 : 1;
    auto split = pick_split(total, rnum, rden, n2_even);
    require(split.has_value(), Errc::params_not_admissible,
            "no admissible factor split of p^2 - 1");
    n1 = split->n1;
    n2 = split->n2;
  }

  Lattice lat = Lattice::from_rows({{1}});
  Shape shape = strip_shape(1);
  Point delta{0, 1};

  switch (family) {
    case DdcFamily::rectangle: {
      require(n1 % 2 == 0, Errc::params_not_admissible, "n1 must be even");
      i64 theta = (n1 % 4 == 0) ? 1 : 2;
      lat = Lattice::from_rows({{n2, n1 / 2 + theta}, {0, n1}});
      shape = rect_shape(n1, n2);
      delta = Point{1, 0};
      break;
    }
    case DdcFamily::corner: {
      require(n1 % 2 == 0, Errc::params_not_admissible, "n1 must be even");
      i64 w1, w2;
      i64 omega = n2 / 3;
      if (n2 % 3 == 1) {
        w1 = omega;
        w2 = omega + 1;
      } else if (n2 % 3 == 2) {
        w1 = omega + 1;
        w2 = omega;
      } else if ((omega - 1) % 3 == 0) {
        w1 = omega + 1;
        w2 = omega - 2;
      } else {
        w1 = omega - 1;
        w2 = omega + 2;
      }
      require(w1 >= 1 && w2 >= 1, Errc::params_not_admissible,
              "split gives a degenerate corner width");
      require(std::gcd(w1, w2) == 1, Errc::params_not_admissible,
              "corner widths " + std::to_string(w1) + "," + std::to_string(w2) +
                  " must be coprime");
      lat = Lattice::from_rows({{w1, n1}, {-w2, 2 * n1}});
      shape = corner_shape(2 * n1, w1 + w2, n1, w2);
      delta = Point{0, 1};
      break;
    }
    case DdcFamily::flipped_t: {
      require(n2 % 2 == 0, Errc::params_not_admissible, "n2 must be even");
      i64 omega = n2 / 4;
      i64 w2 = params.w2.value_or(0);
      i64 w1 = 0, w3 = 0;
      auto widths = [&](i64 w2v) {
        if (n2 % 4 == 0) return std::make_pair(2 * omega + 1 - w2v, 2 * omega - 1 - w2v);
        return std::make_pair(2 * omega + 3 - w2v, 2 * omega - 1 - w2v);
      };
      if (params.w2) {
        std::tie(w1, w3) = widths(w2);
      } else {
        for (w2 = 1; w2 < n2; ++w2) {
          std::tie(w1, w3) = widths(w2);
          if (w1 >= 1 && w3 >= 1 && std::gcd(w1 + w2, w2 + w3) == 1) break;
        }
      }
      require(w1 >= 1 && w2 >= 1 && w3 >= 1, Errc::params_not_admissible,
              "no positive widths for this split");
      require(std::gcd(w1 + w2, w2 + w3) == 1, Errc::params_not_admissible,
              "gcd(w1+w2, w2+w3) must be 1");
      lat = Lattice::from_rows({{w1 + w2, n1}, {w1 + 2 * w2 + w3, 0}});
      shape = flipped_t_shape(n1, w1, w2, w3);
      delta = Point{0, 1};
      break;
    }
  }

  require(lat.volume() == static_cast<i64>(shape.points.size()), Errc::internal_inconsistency,
          "family shape size must match the lattice volume");
  Tiling tiling = Tiling::of(lat, shape);
  Coloring col = Coloring::of(std::move(tiling), delta);
  B2Set b2 = bose_b2(p);
  DotPattern pattern = fold_dots(col, b2);
  require(static_cast<i64>(pattern.dots.size()) == p, Errc::internal_inconsistency,
          "family pattern must have exactly p dots");
  DdcCheck chk = verify_ddc(pattern);
  require(chk.ok, Errc::internal_inconsistency, "family pattern is not a DDC: " + chk.reason);
  PeriodicPattern periodic = build_periodic(col, b2);

  return FamilyInstance{family, p,     n1,    n2,
                        lat,    shape, delta, std::move(b2),
                        std::move(pattern), std::move(periodic)};
}

}  // namespace latfold
