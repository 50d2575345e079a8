#include "latfold/render.hpp"

#include <sstream>
#include <unordered_set>

namespace latfold {

namespace {

void trim_trailing(std::string& line, const std::string& sep, const std::string& blank) {
  const std::string tail = sep + blank;
  while (line.size() >= tail.size() &&
         line.compare(line.size() - tail.size(), tail.size(), tail) == 0)
    line.erase(line.size() - tail.size());
  while (line.size() >= blank.size() && line == blank) line.clear();
}

}  // namespace

std::string render_grid(const Shape& s, const std::string& sep, const std::string& blank,
                        const std::function<std::string(const Point&)>& cell) {
  require(s.dim == 2, Errc::dim_mismatch, "grid rendering is two dimensional");
  auto [lo, hi] = s.bounding_box();
  std::string out;
  for (i64 y = lo[1]; y <= hi[1]; ++y) {
    std::string line;
    for (i64 x = lo[0]; x <= hi[0]; ++x) {
      if (x > lo[0]) line += sep;
      Point p{x, y};
      line += s.contains(p) ? cell(p) : blank;
    }
    trim_trailing(line, sep, blank);
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_coloring(const Coloring& c) {
  return render_grid(c.tiling().shape(), ",", ".",
                     [&](const Point& p) { return std::to_string(c.color(p)); });
}

std::string render_bits(const FoldedArray& fa) {
  return render_grid(fa.shape(), " ", "·",
                     [&](const Point& p) { return std::string(1, char('0' + fa.at(p))); });
}

std::string render_index_grid(const Shape& s,
                              const std::function<i64(const Point&)>& value) {
  return render_grid(s, ",", ".",
                     [&](const Point& p) { return std::to_string(value(p)); });
}

std::string render_hex_grid(const Shape& s,
                            const std::function<i64(const Point&)>& value) {
  return render_grid(s, " ", ".", [&](const Point& p) {
    std::ostringstream os;
    os << std::hex << value(p);
    return os.str();
  });
}

std::string render_dots(const DotPattern& dp) {
  std::unordered_set<Point, PointHash> dots(dp.dots.begin(), dp.dots.end());
  return render_grid(dp.shape, " ", " ", [&](const Point& p) {
    return std::string(dots.count(p) ? "•" : "·");
  });
}

std::string render_pattern_window(const PeriodicPattern& pp, const Point& origin,
                                  i64 width, i64 height) {
  require(pp.dim == 2, Errc::dim_mismatch, "window rendering is two dimensional");
  require(width >= 1 && height >= 1, Errc::bad_input, "window extents must be positive");
  std::string out;
  for (i64 y = origin[1]; y < origin[1] + height; ++y) {
    std::string line;
    for (i64 x = origin[0]; x < origin[0] + width; ++x) {
      if (x > origin[0]) line += ' ';
      line += pp.dot_at(Point{x, y}) ? "•" : "·";
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string pattern_to_pbm(const PeriodicPattern& pp, const Point& origin,
                           i64 width, i64 height) {
  require(pp.dim == 2, Errc::dim_mismatch, "bitmap export is two dimensional");
  require(width >= 1 && height >= 1, Errc::bad_input, "bitmap extents must be positive");
  std::string out = "P1\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
  // bitmaps scan top row first
  for (i64 y = origin[1] + height - 1; y >= origin[1]; --y) {
    for (i64 x = origin[0]; x < origin[0] + width; ++x) {
      if (x > origin[0]) out += ' ';
      out += pp.dot_at(Point{x, y}) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace latfold
