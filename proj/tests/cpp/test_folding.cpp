#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "latfold/folding.hpp"
#include "latfold/shapes.hpp"

using namespace latfold;

TEST_CASE("strip folded orders match the worked tables") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  Tiling t = Tiling::of(lat, strip_shape(11));
  for (size_t k = 0; k < fixtures::kStripDirs.size(); ++k) {
    Coloring col = Coloring::of(t, fixtures::kStripDirs[k]);
    for (i64 x = 0; x < 11; ++x)
      CHECK(col.color(Point{x, 0}) == fixtures::kStripOrders[k][x]);
  }
}

TEST_CASE("staircase folded orders match the worked tables") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  Shape s = Shape::of(2, fixtures::kStairCells);
  Tiling t = Tiling::of(lat, s);
  for (size_t k = 0; k < fixtures::kStripDirs.size(); ++k) {
    Coloring col = Coloring::of(t, fixtures::kStripDirs[k]);
    for (size_t i = 0; i < fixtures::kStairCells.size(); ++i)
      CHECK(col.color(fixtures::kStairCells[i]) == fixtures::kStairOrders[k][i]);
  }
}

TEST_CASE("tee folded orders match the worked tables") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  Shape s = Shape::of(2, fixtures::kTeeCells);
  Tiling t = Tiling::of(lat, s);
  for (size_t k = 0; k < fixtures::kTeeDirs.size(); ++k) {
    Coloring col = Coloring::of(t, fixtures::kTeeDirs[k]);
    for (size_t i = 0; i < fixtures::kTeeCells.size(); ++i)
      CHECK(col.color(fixtures::kTeeCells[i]) == fixtures::kTeeOrders[k][i]);
  }
}

TEST_CASE("square tiling directions split by the second generator") {
  Lattice plain = Lattice::from_rows({{2, 2}, {0, 2}});
  Lattice skew = Lattice::from_rows({{2, 1}, {0, 2}});
  std::vector<Point> dirs = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (const Point& d : dirs) {
    CHECK(!is_folding_2d(plain, d));
    CHECK(!is_folding_bruteforce(plain, d));
  }
  CHECK(is_folding_2d(skew, Point{1, 0}));
  CHECK(is_folding_2d(skew, Point{1, 1}));
  CHECK(is_folding_2d(skew, Point{1, -1}));
  CHECK(!is_folding_2d(skew, Point{0, 1}));
  for (const Point& d : dirs)
    CHECK(is_folding_2d(skew, d) == is_folding_bruteforce(skew, d));
}

TEST_CASE("folded row length divides the volume") {
  Lattice lat = Lattice::from_rows({{2, 2}, {0, 2}});
  for (const Point& d : {Point{1, 0}, Point{0, 1}, Point{1, 1}, Point{2, 1}}) {
    i64 len = folded_row_length(lat, d);
    CHECK(len >= 1);
    CHECK(lat.volume() % len == 0);
  }
}

TEST_CASE("closed forms agree with the walk on random lattices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> entry(-6, 6);
  std::uniform_int_distribution<i64> dentry(-2, 2);
  int tested = 0;
  while (tested < 300) {
    Mat g = Mat::from_rows({{entry(rng), entry(rng)}, {entry(rng), entry(rng)}});
    i64 det = g.det();
    if (det < 0) det = -det;
    if (det < 2 || det > 24) continue;
    Lattice lat = Lattice::of(g);
    Point d{dentry(rng), dentry(rng)};
    if (d.is_zero()) continue;
    bool brute = is_folding_bruteforce(lat, d);
    CHECK(is_folding_2d(lat, d) == brute);
    FoldingCertificate cert = is_folding_ddim(lat, d);
    CHECK(cert.folds == brute);
    CHECK(cert.volume == lat.volume());
    ++tested;
  }
}

TEST_CASE("three dimensional certificate agrees with the walk") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<i64> entry(-3, 3);
  std::uniform_int_distribution<i64> dentry(-1, 1);
  int tested = 0;
  while (tested < 200) {
    Mat g = Mat::from_rows({{entry(rng), entry(rng), entry(rng)},
                            {entry(rng), entry(rng), entry(rng)},
                            {entry(rng), entry(rng), entry(rng)}});
    i64 det = g.det();
    if (det < 0) det = -det;
    if (det < 2 || det > 24) continue;
    Lattice lat = Lattice::of(g);
    Point d{dentry(rng), dentry(rng), dentry(rng)};
    if (d.is_zero()) continue;
    CHECK(is_folding_ddim(lat, d).folds == is_folding_bruteforce(lat, d));
    ++tested;
  }
}

TEST_CASE("certificate cross check identity") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  FoldingCertificate cert = is_folding_ddim(lat, Point{0, 1});
  CHECK(cert.folds);
  CHECK(cert.volume == 11);
  REQUIRE(cert.alpha.size() == 2);
  Mat g = lat.gen();
  for (int j = 0; j < 2; ++j) {
    i64 sum = 0;
    for (int i = 0; i < 2; ++i) sum += cert.alpha[i] * g.at(i, j);
    CHECK((sum == 11 * (j == 0 ? 0 : 1) || sum == -11 * (j == 0 ? 0 : 1)));
  }
}

TEST_CASE("folded indices report unreached cells") {
  Lattice lat = Lattice::from_rows({{2, 2}, {0, 2}});
  Tiling t = Tiling::of(lat, rect_shape(2, 2));
  std::vector<i64> idx = folded_indices(t, Point{1, 0});
  i64 unreached = 0;
  for (i64 v : idx)
    if (v < 0) ++unreached;
  CHECK(unreached == 2);
  std::vector<Point> row = folded_row(t, Point{1, 0});
  CHECK(row.size() == 2);
}

TEST_CASE("coloring is constant on cosets and steps along the direction") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  Tiling t = Tiling::of(lat, strip_shape(11));
  Point d{1, 1};
  Coloring col = Coloring::of(t, d);
  std::mt19937 rng(3);
  std::uniform_int_distribution<i64> coord(-50, 50);
  for (int i = 0; i < 200; ++i) {
    Point p{coord(rng), coord(rng)};
    CHECK(col.color(p + Point{3, 2}) == col.color(p));
    CHECK(col.color(p + d) == (col.color(p) + 1) % 11);
  }
}

TEST_CASE("folding class count is half the totient") {
  Lattice lat = Lattice::from_rows(fixtures::kLat11);
  Tiling t = Tiling::of(lat, strip_shape(11));
  FoldingEnumeration e = enumerate_foldings(t);
  CHECK(e.classes.size() == 5);
  CHECK(e.directions_folding > 0);
  for (const FoldingClass& fc : e.classes) {
    CHECK(fc.row.size() == 11);
    CHECK(is_folding_bruteforce(lat, fc.delta));
  }
}

TEST_CASE("totient values") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(11) == 10);
  CHECK(euler_phi(31) == 30);
  CHECK(euler_phi(48) == 16);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("diagonal classic fold reproduces the worked grid") {
  ClassicFold cf = classic_fold(ClassicKind::diagonal, 3, 5);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  for (i64 y = 0; y < 3; ++y)
    for (i64 x = 0; x < 5; ++x)
      CHECK(col.color(Point{x, y}) == fixtures::kDiag3x5Indices[y][x]);
}

TEST_CASE("diagonal classic fold needs coprime sides") {
  CHECK_THROWS_AS(classic_fold(ClassicKind::diagonal, 2, 4), Error);
}

TEST_CASE("row major classic fold counts left to right") {
  ClassicFold cf = classic_fold(ClassicKind::row_major, 3, 5);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  for (i64 y = 0; y < 3; ++y)
    for (i64 x = 0; x < 5; ++x) CHECK(col.color(Point{x, y}) == x + 5 * y);
}

TEST_CASE("diagonal coloring scheme") {
  ClassicFold cf = classic_fold(ClassicKind::coloring_diag, 4, 8);
  CHECK(cf.lat.volume() == 31);
  CHECK(cf.shape.size() == 31);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  std::mt19937 rng(5);
  std::uniform_int_distribution<i64> coord(-40, 40);
  for (int i = 0; i < 200; ++i) {
    Point p{coord(rng), coord(rng)};
    CHECK(col.color(p) == mod_floor(3 * p.x() + 4 * p.y(), 31));
  }
}
