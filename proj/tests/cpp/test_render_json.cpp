#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "latfold/burst.hpp"
#include "latfold/json_io.hpp"
#include "latfold/prarray.hpp"
#include "latfold/render.hpp"
#include "latfold/shapes.hpp"

using namespace latfold;

TEST_CASE("coloring renders one comma separated row per lattice row") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  Coloring col = Coloring::of(Tiling::of(lat, strip_shape(11)), Point{0, 1});
  CHECK(render_coloring(col) == "0,3,6,9,1,4,7,10,2,5,8\n");
}

TEST_CASE("grids blank-fill holes and trim trailing blanks") {
  Shape corner = corner_shape(2, 3, 1, 1);
  std::string grid = render_index_grid(corner, [](const Point& p) { return p.x() + 10 * p.y(); });
  CHECK(grid == "0,1,2\n10,11\n");

  Shape gap = Shape::of(2, {Point{0, 0}, Point{2, 0}});
  CHECK(render_index_grid(gap, [](const Point& p) { return p.x(); }) == "0,.,2\n");

  CHECK(render_hex_grid(rect_shape(1, 3), [](const Point& p) { return 10 + p.x(); }) ==
        "a b c\n");
}

TEST_CASE("folded array bits render lowest row first") {
  ClassicFold cf = classic_fold(ClassicKind::diagonal, 3, 5);
  std::vector<uint8_t> bits;
  for (char c : fixtures::kSeq15) bits.push_back(static_cast<uint8_t>(c - '0'));
  FoldedArray fa = fold_bits(cf.lat, cf.shape, cf.delta, bits);
  CHECK(render_bits(fa) == "0 1 0 1 0\n1 0 0 0 1\n1 1 0 1 1\n");
}

TEST_CASE("dot patterns render with dot glyphs") {
  DotPattern dp;
  dp.shape = rect_shape(3, 5);
  dp.dots = fixtures::kRulerDots3x5;
  CHECK(render_dots(dp) == "• • · · •\n· · · · ·\n• · • · ·\n");
}

TEST_CASE("pattern windows are periodic and bitmaps scan top row first") {
  PeriodicPattern pp;
  pp.dim = 2;
  pp.period = {2, 3};
  pp.dots = {Point{0, 0}, Point{1, 2}};
  CHECK(render_pattern_window(pp, Point{0, 0}, 2, 3) == "• ·\n· ·\n· •\n");
  CHECK(render_pattern_window(pp, Point{2, 3}, 2, 3) == "• ·\n· ·\n· •\n");
  CHECK(render_pattern_window(pp, Point{-2, 0}, 2, 3) == "• ·\n· ·\n· •\n");
  CHECK(pattern_to_pbm(pp, Point{0, 0}, 2, 3) == "P1\n2 3\n0 1\n0 0\n1 0\n");
  CHECK_THROWS_AS(render_pattern_window(pp, Point{0, 0}, 0, 3), Error);
}

TEST_CASE("points round trip through json") {
  Point p{1, -2};
  json j = point_to_json(p);
  CHECK(j.dump() == "[1,-2]");
  CHECK(point_from_json(j) == p);
  CHECK_THROWS_AS(point_from_json(json::array()), Error);
  CHECK_THROWS_AS(point_from_json(json::parse("[1.5]")), Error);
  CHECK_THROWS_AS(point_from_json(json::parse("[1,2,3,4,5,6,7]")), Error);
}

TEST_CASE("shapes round trip through json") {
  Shape s = corner_shape(5, 7, 1, 4);
  Shape back = shape_from_json(shape_to_json(s));
  CHECK(back.dim == s.dim);
  CHECK(back.points == s.points);
  CHECK(back.center == s.center);

  Shape bare = shape_from_json(json::parse("[[0,0],[1,0],[1,1]]"));
  CHECK(bare.points == Shape::of(2, {Point{0, 0}, Point{1, 0}, Point{1, 1}}).points);
  CHECK_THROWS_AS(shape_from_json(json::parse("{\"dim\": 2}")), Error);
}

TEST_CASE("lattices round trip through json") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  json j = lattice_to_json(lat);
  CHECK(j["gen"] == json(fixtures::kLat11));
  CHECK(lattice_from_json(j) == lat);
  CHECK(lattice_from_json(json::parse("[[3,2],[7,1]]")) == lat);
  CHECK_THROWS_AS(lattice_from_json(json::parse("{\"dim\": 2}")), Error);
}

TEST_CASE("difference sets round trip through json and sort") {
  json j = json::parse("{\"n\": 7, \"elements\": [3, 0, 1]}");
  B2Set b = b2_from_json(j);
  CHECK(b.n == 7);
  CHECK(b.elements == std::vector<i64>{0, 1, 3});
  B2Set back = b2_from_json(b2_to_json(b));
  CHECK(back.n == b.n);
  CHECK(back.elements == b.elements);
}

TEST_CASE("dot patterns round trip through json") {
  DotPattern dp;
  dp.shape = rect_shape(3, 5);
  dp.dots = fixtures::kRulerDots3x5;
  DotPattern back = dot_pattern_from_json(dot_pattern_to_json(dp));
  CHECK(back.shape.points == dp.shape.points);
  CHECK(back.dots == dp.dots);

  json bad = dot_pattern_to_json(dp);
  bad["dots"].push_back(json::parse("[9,9]"));
  CHECK_THROWS_AS(dot_pattern_from_json(bad), Error);
}

TEST_CASE("periodic patterns wrap and deduplicate dots on load") {
  json j = json::parse(
      "{\"period\": [31, 31], \"dots\": [[-1, 32], [30, 1], [0, 0]]}");
  PeriodicPattern pp = periodic_pattern_from_json(j);
  CHECK(pp.dim == 2);
  CHECK(pp.dots == std::vector<Point>{Point{0, 0}, Point{30, 1}});
  PeriodicPattern back = periodic_pattern_from_json(periodic_pattern_to_json(pp));
  CHECK(back.period == pp.period);
  CHECK(back.dots == pp.dots);
  CHECK_THROWS_AS(
      periodic_pattern_from_json(json::parse("{\"period\": [0, 3], \"dots\": []}")),
      Error);
}

TEST_CASE("burst code summaries carry the full column set") {
  BurstCode code = BurstCode::of_box({3, 5});
  json j = burst_code_to_json(code);
  CHECK(j["dims"] == json(std::vector<i64>{3, 5}));
  CHECK(!j.contains("shape"));
  CHECK(j["m"] == 4);
  CHECK(j["d"] == 1);
  CHECK(j["redundancy"] == 6);
  CHECK(j["modulus"] == 19);
  CHECK(j["columns"].size() == 15);
  CHECK(j["exponents"].size() == 15);
  CHECK(j["padding"].empty());
  std::ostringstream os;
  os << std::hex << code.column(0);
  CHECK(j["columns"][0] == os.str());
}

TEST_CASE("json arguments accept inline text or a file path") {
  json inline_arg = parse_json_arg("  [1, 2]");
  CHECK(inline_arg[0] == 1);

  const char* path = "tmp_json_arg.json";
  {
    std::ofstream out(path);
    out << "{\"n\": 7, \"elements\": [0, 1, 3]}";
  }
  B2Set b = parse_b2_arg(path);
  std::remove(path);
  CHECK(b.n == 7);
  CHECK(b.elements.size() == 3);

  CHECK_THROWS_AS(parse_json_arg("[1, 2"), Error);
  CHECK_THROWS_AS(parse_json_arg("no_such_file.json"), Error);
}

TEST_CASE("shape and point arguments") {
  CHECK(parse_shape_arg("rect:3,5").points == rect_shape(3, 5).points);
  CHECK(parse_shape_arg("[[0,0],[1,0]]").points ==
        Shape::of(2, {Point{0, 0}, Point{1, 0}}).points);
  CHECK(parse_point_arg("1,-1") == Point{1, -1});
  CHECK(parse_point_arg("1, 2") == Point{1, 2});
  CHECK(parse_point_arg("0,1,-1") == Point{0, 1, -1});
  CHECK_THROWS_AS(parse_point_arg(""), Error);
  CHECK_THROWS_AS(parse_point_arg("1,2x"), Error);
  CHECK_THROWS_AS(parse_point_arg("1,,2"), Error);
}
