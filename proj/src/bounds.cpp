#include "latfold/bounds.hpp"

#include <cmath>
#include <functional>

namespace latfold {

namespace {

constexpr double kPi = 3.14159265358979323846;

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Vec2 line_intersect(const Vec2& p1, const Vec2& p2, const Vec2& a, const Vec2& b) {
  double x1 = p1[0], y1 = p1[1], x2 = p2[0], y2 = p2[1];
  double x3 = a[0], y3 = a[1], x4 = b[0], y4 = b[1];
  double den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
  double t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den;
  return {x1 + t * (x2 - x1), y1 + t * (y2 - y1)};
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-8) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

// tile polygon for the pentagon construction: a symmetric hexagon standing on
// the pentagon's bottom edge, reaching height 2a above it and bulging
// sideways at half height
Polygon pentagon_tile(double a) {
  double y0 = -std::cos(kPi / 5);
  double b = 2 * std::sin(kPi / 5);
  double w = a * std::tan(kPi / 10);
  return {{b / 2, y0},          {b / 2 + w, y0 + a}, {b / 2, y0 + 2 * a},
          {-b / 2, y0 + 2 * a}, {-b / 2 - w, y0 + a}, {-b / 2, y0}};
}

// tile polygon for the heptagon construction: a hexagon with a vertex on the
// heptagon's rightmost vertex, two sides along the heptagon's right sides,
// horizontal top and bottom at height y(x), and left sides parallel to the
// right ones meeting at distance a beyond the heptagon's left edge
Polygon heptagon_tile(double x, double a) {
  double c1 = std::cos(2 * kPi / 7), s1 = std::sin(2 * kPi / 7);
  double ystar = s1 + std::sin(kPi / 14) * x;
  double a1x = 1 - (1 - c1) * (ystar / s1);
  double slope = s1 / (1 - c1);
  double pleft = std::cos(6 * kPi / 7) - a;
  double a2x = pleft + ystar / slope;
  return {{a1x, -ystar}, {1, 0}, {a1x, ystar}, {a2x, ystar}, {pleft, 0}, {a2x, -ystar}};
}

double octagon_tile_area(double alpha) {
  return 4 * alpha - 2 * alpha * alpha * std::sin(kPi / 8) / std::sin(3 * kPi / 8);
}

double octagon_covered(double alpha) {
  return 4 * std::sin(kPi / 4) -
         2 * (1 - alpha) * (1 - alpha) * std::sin(3 * kPi / 8) / std::sin(kPi / 8);
}

double decagon_tile_area(double a) {
  double s18 = std::sin(kPi / 10), s36 = std::sin(kPi / 5), s54 = std::sin(3 * kPi / 10);
  return 2 * (2 * std::sin(2 * kPi / 5) + 2 * s18 * s36 / s54 - s36 / s54 * a) * a;
}

double decagon_covered(double a) {
  return 5 * std::sin(kPi / 5) -
         2 * std::sin(2 * kPi / 5) / std::sin(kPi / 10) * (1 - a) * (1 - a);
}

double circle_tile_area(double theta) {
  double rho = std::cos(theta / 2) / std::cos(kPi / 6);
  return 3 * std::sqrt(3.0) / 2 * rho * rho;
}

double circle_covered(double theta) { return kPi - 3 * theta + 3 * std::sin(theta); }

void check_params(BoundFamily f, const std::vector<double>& params) {
  auto ranges = bound_param_ranges(f);
  require(params.size() == ranges.size(), Errc::params_not_admissible,
          std::string(bound_family_name(f)) + " takes " + std::to_string(ranges.size()) +
              " parameters");
  for (size_t i = 0; i < params.size(); ++i)
    require(params[i] >= ranges[i][0] && params[i] <= ranges[i][1],
            Errc::params_not_admissible,
            "parameter " + std::to_string(i) + " outside [" +
                std::to_string(ranges[i][0]) + ", " + std::to_string(ranges[i][1]) + "]");
}

}  // namespace

double polygon_area(const Polygon& p) {
  if (p.size() < 3) return 0;
  double acc = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const Vec2& a = p[i];
    const Vec2& b = p[(i + 1) % p.size()];
    acc += a[0] * b[1] - a[1] * b[0];
  }
  return std::abs(acc) / 2;
}

Polygon regular_polygon(int n, double radius, double phase) {
  require(n >= 3, Errc::bad_input, "a polygon needs at least 3 vertices");
  Polygon out;
  out.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double t = phase + 2 * kPi * k / n;
    out.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return out;
}

Polygon convex_intersection(const Polygon& p, const Polygon& q) {
  if (p.size() < 3 || q.size() < 3) return {};
  Polygon out = p;
  for (size_t i = 0; i < q.size() && !out.empty(); ++i) {
    const Vec2& a = q[i];
    const Vec2& b = q[(i + 1) % q.size()];
    Polygon in;
    in.swap(out);
    for (size_t j = 0; j < in.size(); ++j) {
      const Vec2& cur = in[j];
      const Vec2& nxt = in[(j + 1) % in.size()];
      double dc = cross(a, b, cur);
      double dn = cross(a, b, nxt);
      if (dc >= 0) out.push_back(cur);
      if ((dc > 0 && dn < 0) || (dc < 0 && dn > 0))
        out.push_back(line_intersect(cur, nxt, a, b));
    }
  }
  return out;
}

double convex_intersection_area(const Polygon& p, const Polygon& q) {
  return polygon_area(convex_intersection(p, q));
}

const char* bound_family_name(BoundFamily f) {
  switch (f) {
    case BoundFamily::triangle_eq: return "triangle_eq";
    case BoundFamily::triangle_iso: return "triangle_iso";
    case BoundFamily::pentagon: return "pentagon";
    case BoundFamily::hexagon: return "hexagon";
    case BoundFamily::heptagon: return "heptagon";
    case BoundFamily::octagon: return "octagon";
    case BoundFamily::nonagon: return "nonagon";
    case BoundFamily::decagon: return "decagon";
    case BoundFamily::ngon_12k: return "ngon12k";
    case BoundFamily::circle: return "circle";
  }
  return "unknown";
}

BoundFamily parse_bound_family(const std::string& name) {
  for (BoundFamily f :
       {BoundFamily::triangle_eq, BoundFamily::triangle_iso, BoundFamily::pentagon,
        BoundFamily::hexagon, BoundFamily::heptagon, BoundFamily::octagon,
        BoundFamily::nonagon, BoundFamily::decagon, BoundFamily::ngon_12k,
        BoundFamily::circle})
    if (name == bound_family_name(f)) return f;
  fail(Errc::bad_input, "unknown bound family '" + name + "'");
}

std::vector<std::array<double, 2>> bound_param_ranges(BoundFamily f) {
  switch (f) {
    case BoundFamily::pentagon:
      return {{2 * std::sin(kPi / 10) * std::cos(3 * kPi / 10),
               (1 + std::sin(3 * kPi / 10)) / 2}};
    case BoundFamily::heptagon:
      return {{0.0, 0.85}, {0.0, 0.4}};
    case BoundFamily::octagon:
      return {{1e-6, 1.0}};
    case BoundFamily::decagon:
      return {{1e-6, 1.0}};
    case BoundFamily::circle:
      return {{1e-6, kPi / 3}};
    default:
      return {};
  }
}

double eval_lower_bound(BoundFamily f, const std::vector<double>& params, int n) {
  check_params(f, params);
  switch (f) {
    case BoundFamily::triangle_eq:
      return (3 * std::sqrt(2.0) - 2 * std::sqrt(3.0)) / std::pow(3.0, 0.25);
    case BoundFamily::triangle_iso:
      return 2 * std::sqrt(3.0) - 2 * std::sqrt(2.0);
    case BoundFamily::pentagon: {
      Polygon s = pentagon_tile(params[0]);
      Polygon q = regular_polygon(5, 1.0, kPi / 2);
      return convex_intersection_area(s, q) / std::sqrt(polygon_area(s));
    }
    case BoundFamily::hexagon:
      return std::sqrt(3 * std::sqrt(3.0) / 2);
    case BoundFamily::heptagon: {
      Polygon s = heptagon_tile(params[0], params[1]);
      Polygon q = regular_polygon(7, 1.0, 0.0);
      return convex_intersection_area(s, q) / std::sqrt(polygon_area(s));
    }
    case BoundFamily::octagon:
      return octagon_covered(params[0]) / std::sqrt(octagon_tile_area(params[0]));
    case BoundFamily::nonagon: {
      double rho = std::sin(11 * kPi / 18) / std::sin(kPi / 3);
      double s = 3 * std::sqrt(3.0) / 2 * rho * rho;
      double delta = s - 6 * std::sin(kPi / 18) * std::sin(kPi / 18) *
                             std::cos(kPi / 9) / std::sin(kPi / 3);
      return delta / std::sqrt(s);
    }
    case BoundFamily::decagon:
      return decagon_covered(params[0]) / std::sqrt(decagon_tile_area(params[0]));
    case BoundFamily::ngon_12k: {
      require(n >= 12 && n % 12 == 0, Errc::params_not_admissible,
              "side count must be a positive multiple of 12");
      return (6 + n * std::sin(2 * kPi / n)) /
             (2 * std::pow(3.0, 0.25) * (std::sqrt(3.0) + 1));
    }
    case BoundFamily::circle:
      return circle_covered(params[0]) / std::sqrt(circle_tile_area(params[0]));
  }
  fail(Errc::internal_inconsistency, "unhandled family");
}

double upper_coeff(BoundFamily f, int n) {
  switch (f) {
    case BoundFamily::triangle_eq:
      return std::pow(3.0, 0.25) / 2;
    case BoundFamily::triangle_iso:
      return 1 / std::sqrt(2.0);
    case BoundFamily::circle:
      return std::sqrt(kPi);
    case BoundFamily::ngon_12k:
      break;
    case BoundFamily::pentagon: n = 5; break;
    case BoundFamily::hexagon: n = 6; break;
    case BoundFamily::heptagon: n = 7; break;
    case BoundFamily::octagon: n = 8; break;
    case BoundFamily::nonagon: n = 9; break;
    case BoundFamily::decagon: n = 10; break;
  }
  require(n >= 3, Errc::bad_input, "side count required");
  return std::sqrt(n * std::sin(2 * kPi / n) / 2);
}

BoundResult optimize_bound(BoundFamily f, int n) {
  BoundResult res;
  res.family = f;
  res.n = n;
  auto ranges = bound_param_ranges(f);
  if (ranges.empty()) {
    res.argmax = {};
    res.lower = eval_lower_bound(f, {}, n);
  } else if (ranges.size() == 1) {
    auto g = [&](double v) { return eval_lower_bound(f, {v}, n); };
    double best = golden_max(g, ranges[0][0], ranges[0][1]);
    res.argmax = {best};
    res.lower = g(best);
  } else {
    // coarse grid, then coordinate-wise golden refinement
    double bx = ranges[0][0], by = ranges[1][0];
    double bf = -1;
    const int grid = 64;
    for (int i = 0; i <= grid; ++i)
      for (int j = 0; j <= grid; ++j) {
        double x = ranges[0][0] + (ranges[0][1] - ranges[0][0]) * i / grid;
        double y = ranges[1][0] + (ranges[1][1] - ranges[1][0]) * j / grid;
        double v = eval_lower_bound(f, {x, y}, n);
        if (v > bf) {
          bf = v;
          bx = x;
          by = y;
        }
      }
    double wx = (ranges[0][1] - ranges[0][0]) / grid;
    double wy = (ranges[1][1] - ranges[1][0]) / grid;
    for (int round = 0; round < 6; ++round) {
      bx = golden_max(
          [&](double x) { return eval_lower_bound(f, {x, by}, n); },
          std::max(ranges[0][0], bx - wx), std::min(ranges[0][1], bx + wx));
      by = golden_max(
          [&](double y) { return eval_lower_bound(f, {bx, y}, n); },
          std::max(ranges[1][0], by - wy), std::min(ranges[1][1], by + wy));
      wx /= 2;
      wy /= 2;
    }
    res.argmax = {bx, by};
    res.lower = eval_lower_bound(f, {bx, by}, n);
  }
  res.upper = upper_coeff(f, n);
  res.ratio = res.lower / res.upper;
  return res;
}

std::vector<BoundTableRow> table_bounds() {
  std::vector<BoundTableRow> rows;
  auto add = [&](const std::string& label, int n, BoundFamily f, double scale = 1.0) {
    BoundResult r = optimize_bound(f, n);
    rows.push_back({label, n, r.upper * scale, r.lower * scale, r.ratio});
  };
  // the triangle family is stated per unit side; a triangle with unit
  // circumradius has side sqrt(3)
  add("3", 3, BoundFamily::triangle_eq, std::sqrt(3.0));
  rows.push_back({"4", 4, std::sqrt(2.0), std::sqrt(2.0), 1.0});
  add("5", 5, BoundFamily::pentagon);
  add("6", 6, BoundFamily::hexagon);
  add("7", 7, BoundFamily::heptagon);
  add("8", 8, BoundFamily::octagon);
  add("9", 9, BoundFamily::nonagon);
  add("10", 10, BoundFamily::decagon);
  for (int n : {12, 24, 36, 48, 60, 72, 84, 96})
    add(std::to_string(n), n, BoundFamily::ngon_12k);
  add("circle", 0, BoundFamily::circle);
  return rows;
}

}  // namespace latfold
