#include <doctest.h>

#include <set>

#include "latfold/lattice.hpp"
#include "latfold/shapes.hpp"

using namespace latfold;

TEST_CASE("point ordering and arithmetic") {
  Point a{1, 2};
  Point b{1, 3};
  CHECK(a < b);
  CHECK(Point{0, 5} < a);
  CHECK(a + b == Point{2, 5});
  CHECK(a - b == Point{0, -1});
  CHECK(-a == Point{-1, -2});
  CHECK(a * 3 == Point{3, 6});
  CHECK(Point::unit(3, 1) == Point{0, 1, 0});
  CHECK(Point::zero(2).is_zero());
  CHECK(to_string(a) == "(1,2)");
}

TEST_CASE("matrix determinant") {
  Mat g = Mat::from_rows({{3, 2}, {7, 1}});
  CHECK(g.det() == -11);
  CHECK(Mat::identity(3).det() == 1);
  Mat h = Mat::from_rows({{2, 0, 0}, {1, 3, 0}, {5, 2, 4}});
  CHECK(h.det() == 24);
}

TEST_CASE("hermite form and coset box") {
  Lattice lat = Lattice::from_rows({{2, 1}, {0, 2}});
  CHECK(lat.volume() == 4);
  Mat h = lat.hnf();
  CHECK(h.at(0, 0) == 4);
  CHECK(h.at(0, 1) == 0);
  CHECK(h.at(1, 0) == 2);
  CHECK(h.at(1, 1) == 1);
  Shape box = coset_box_shape(lat);
  CHECK(box.size() == 4);
  for (const Point& p : box.points) CHECK(p.y() == 0);
}

TEST_CASE("coset index is a bijection on the coset box") {
  for (const auto& rows : {std::vector<std::vector<i64>>{{3, 2}, {7, 1}},
                           {{4, 0}, {1, 3}},
                           {{5, -2}, {3, 4}}}) {
    Lattice lat = Lattice::from_rows(rows);
    std::set<i64> seen;
    for (const Point& p : coset_box_shape(lat).points) {
      i64 idx = lat.coset_index(p);
      CHECK(idx >= 0);
      CHECK(idx < lat.volume());
      seen.insert(idx);
    }
    CHECK(static_cast<i64>(seen.size()) == lat.volume());
  }
}

TEST_CASE("lattice membership") {
  Lattice lat = Lattice::from_rows({{3, 2}, {7, 1}});
  CHECK(lat.contains(Point{3, 2}));
  CHECK(lat.contains(Point{10, 3}));
  CHECK(lat.contains(Point{-3, -2}));
  CHECK(!lat.contains(Point{1, 0}));
  CHECK(lat.contains(Point::zero(2)));
}

TEST_CASE("tiling verification accepts a worked tiling") {
  Lattice lat = Lattice::from_rows({{2, 2}, {0, 2}});
  TilingCheck chk = verify_tiling(lat, rect_shape(2, 2));
  CHECK(chk.ok);
}

TEST_CASE("tiling verification rejects coset collisions") {
  Lattice lat = Lattice::from_rows({{4, 0}, {1, 1}});
  TilingCheck chk = verify_tiling(lat, rect_shape(2, 2));
  CHECK(!chk.ok);
  REQUIRE(chk.collision.has_value());
  auto [p, q] = *chk.collision;
  CHECK(p != q);
  CHECK(lat.contains(p - q));
}

TEST_CASE("tiling verification rejects size mismatch") {
  Lattice lat = Lattice::from_rows({{3, 0}, {0, 2}});
  CHECK(!verify_tiling(lat, rect_shape(2, 2)).ok);
  CHECK_THROWS_AS(Tiling::of(lat, rect_shape(2, 2)), Error);
}

TEST_CASE("cell map assigns each point to its covering copy") {
  Lattice lat = Lattice::from_rows({{3, 2}, {7, 1}});
  Tiling t = Tiling::of(lat, rect_shape(1, 11));
  for (i64 x = -15; x <= 15; x += 3)
    for (i64 y = -15; y <= 15; y += 5) {
      Point p{x, y};
      Point c = t.cell_of(p);
      CHECK(lat.contains(p - c));
      CHECK(t.shape().contains(c));
      Point ctr = t.center_of(p);
      CHECK(lat.contains(ctr));
      CHECK(ctr + c == p);
    }
}

TEST_CASE("shape normalization places the center at the origin") {
  Shape s = Shape::of(2, {{5, 5}, {6, 5}, {5, 6}});
  CHECK(s.contains(Point::zero(2)));
  CHECK(s.center == Point::zero(2));
  CHECK(s.size() == 3);
  auto [lo, hi] = s.bounding_box();
  CHECK(lo == Point{0, 0});
  CHECK(hi == Point{1, 1});
}

TEST_CASE("recentering keeps the point set") {
  Shape s = rect_shape(2, 3);
  Shape r = s.recentered(Point{1, 1});
  CHECK(r.size() == s.size());
  CHECK(r.contains(Point::zero(2)));
  CHECK(r.contains(Point{-1, -1}));
}

TEST_CASE("duplicate points are rejected") {
  CHECK_THROWS_AS(Shape::of(2, {{0, 0}, {0, 0}, {1, 0}}), Error);
}

TEST_CASE("coset box always tiles") {
  for (const auto& rows : {std::vector<std::vector<i64>>{{3, 1}, {-2, 4}},
                           {{6, 0}, {3, 2}},
                           {{2, 9}, {1, -3}}}) {
    Lattice lat = Lattice::from_rows(rows);
    CHECK(verify_tiling(lat, coset_box_shape(lat)).ok);
  }
}

TEST_CASE("three dimensional lattice basics") {
  Lattice lat = Lattice::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}});
  CHECK(lat.volume() == 24);
  CHECK(verify_tiling(lat, box_shape({2, 3, 4})).ok);
  CHECK(lat.contains(Point{2, 3, 4}));
  CHECK(!lat.contains(Point{1, 3, 4}));
}
