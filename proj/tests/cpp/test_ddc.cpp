#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "latfold/ddc.hpp"
#include "latfold/shapes.hpp"

using namespace latfold;

TEST_CASE("difference verification accepts a folded ruler") {
  ClassicFold cf = classic_fold(ClassicKind::row_major, 3, 5);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  B2Set ruler{15, fixtures::kRuler13};
  DotPattern dp = fold_dots(col, ruler);
  CHECK(dp.dots == fixtures::kRulerDots3x5);
  CHECK(verify_ddc(dp).ok);
}

TEST_CASE("difference verification reports a witness") {
  DdcCheck chk = verify_ddc({Point{0, 0}, Point{1, 0}, Point{2, 0}});
  CHECK(!chk.ok);
  REQUIRE(chk.witness.has_value());
  const auto& w = *chk.witness;
  CHECK(w[1] - w[0] == w[3] - w[2]);
  CHECK(w[0] != w[2]);
}

TEST_CASE("empty and singleton patterns are trivially fine") {
  CHECK(verify_ddc(std::vector<Point>{}).ok);
  CHECK(verify_ddc({Point{3, 4}}).ok);
}

TEST_CASE("periodic pattern wrapping") {
  ClassicFold cf = classic_fold(ClassicKind::coloring_diag, 4, 8);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  B2Set b{31, {0, 1, 4, 10, 12, 17}};
  REQUIRE(verify_b2(b).ok);
  PeriodicPattern pp = build_periodic(col, b);
  CHECK(pp.period == std::vector<i64>{31, 31});
  auto [num, den] = pp.density();
  CHECK(num * 31 == den * 6);
  for (const Point& d : pp.dots) {
    CHECK(pp.dot_at(d));
    CHECK(pp.dot_at(d + Point{31, 0}));
    CHECK(pp.dot_at(d + Point{-31, 31}));
  }
  CHECK(pp.wrap(Point{-1, 32}) == Point{30, 1});
}

TEST_CASE("periodic window check on the diagonal scheme") {
  ClassicFold cf = classic_fold(ClassicKind::coloring_diag, 4, 8);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  B2Set b{31, {0, 1, 4, 10, 12, 17}};
  PeriodicPattern pp = build_periodic(col, b);
  CHECK(verify_periodic_sddc(pp, cf.shape, 1'000'000).ok);
}

TEST_CASE("periodic window check fails on a spoiled pattern") {
  ClassicFold cf = classic_fold(ClassicKind::coloring_diag, 4, 8);
  Tiling t = Tiling::of(cf.lat, cf.shape);
  Coloring col = Coloring::of(t, cf.delta);
  B2Set spoiled{31, {0, 1, 2, 4, 10, 12}};
  PeriodicPattern pp = build_periodic(col, spoiled);
  DdcCheck chk = verify_periodic_sddc(pp, cf.shape, 1'000'000);
  CHECK(!chk.ok);
  CHECK(chk.witness.has_value());
}

TEST_CASE("rectangle family instance") {
  FamilyInstance inst = construct_ddc_family(DdcFamily::rectangle, FamilyParams{7, {}, {}});
  CHECK(inst.n1 == 6);
  CHECK(inst.n2 == 8);
  CHECK(inst.lat.gen().to_rows() == std::vector<std::vector<i64>>{{8, 5}, {0, 6}});
  CHECK(inst.shape.size() == 48);
  CHECK(inst.delta == Point{1, 0});
  CHECK(inst.pattern.dots.size() == 7);
  CHECK(verify_ddc(inst.pattern).ok);
  CHECK(verify_periodic_sddc(inst.periodic, inst.shape, 5'000'000).ok);
}

TEST_CASE("rectangle family honors an explicit split") {
  FamilyInstance inst = construct_ddc_family(DdcFamily::rectangle, FamilyParams{7, 4, {}});
  CHECK(inst.n1 == 4);
  CHECK(inst.n2 == 12);
  CHECK(inst.lat.gen().to_rows() == std::vector<std::vector<i64>>{{12, 3}, {0, 4}});
  CHECK(inst.shape.points == rect_shape(4, 12).points);
  CHECK(inst.pattern.dots.size() == 7);
  CHECK(verify_ddc(inst.pattern).ok);
}

TEST_CASE("corner family instance") {
  FamilyInstance inst = construct_ddc_family(DdcFamily::corner, FamilyParams{7, {}, {}});
  CHECK(inst.n1 == 4);
  CHECK(inst.n2 == 12);
  CHECK(inst.lat.gen().to_rows() == std::vector<std::vector<i64>>{{5, 4}, {-2, 8}});
  CHECK(inst.shape.points == corner_shape(8, 7, 4, 2).points);
  CHECK(inst.pattern.dots.size() == 7);
  CHECK(verify_periodic_sddc(inst.periodic, inst.shape, 5'000'000).ok);
}

TEST_CASE("flipped T family instance") {
  FamilyInstance inst = construct_ddc_family(DdcFamily::flipped_t, FamilyParams{7, {}, {}});
  CHECK(inst.n1 == 6);
  CHECK(inst.n2 == 8);
  CHECK(inst.shape.points == flipped_t_shape(6, 4, 1, 2).points);
  CHECK(inst.lat.gen().to_rows() == std::vector<std::vector<i64>>{{5, 6}, {8, 0}});
  CHECK(inst.pattern.dots.size() == 7);
  CHECK(verify_periodic_sddc(inst.periodic, inst.shape, 5'000'000).ok);
}

TEST_CASE("wide corner family instance") {
  FamilyInstance inst = construct_ddc_family(DdcFamily::corner, FamilyParams{11, {}, {}});
  CHECK(inst.n1 == 6);
  CHECK(inst.n2 == 20);
  CHECK(inst.shape.points == corner_shape(12, 13, 6, 6).points);
  CHECK(inst.pattern.dots.size() == 11);
  CHECK(verify_periodic_sddc(inst.periodic, inst.shape, 20'000'000).ok);
}

TEST_CASE("family rejects inadmissible parameters") {
  CHECK_THROWS_AS(construct_ddc_family(DdcFamily::rectangle, FamilyParams{6, {}, {}}),
                  Error);
  CHECK_THROWS_AS(construct_ddc_family(DdcFamily::rectangle, FamilyParams{7, 5, {}}),
                  Error);
  CHECK_THROWS_AS(construct_ddc_family(DdcFamily::corner, FamilyParams{7, 3, {}}), Error);
}

TEST_CASE("family names round trip") {
  for (DdcFamily f : {DdcFamily::rectangle, DdcFamily::corner, DdcFamily::flipped_t})
    CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("flippedt") == DdcFamily::flipped_t);
  CHECK_THROWS_AS(parse_family("hexagon"), Error);
}

TEST_CASE("flipped pattern covers small hex windows") {
  FamilyInstance inst = construct_ddc_family(DdcFamily::corner, FamilyParams{5, {}, {}});
  PeriodicPattern flipped = inst.periodic.flipped_horizontal();
  CHECK(flipped.dots.size() == inst.periodic.dots.size());
  CHECK(verify_periodic_sddc(flipped, hex_sphere_shape(1), 2'000'000).ok);
}

TEST_CASE("best placement stays inside the pattern") {
  FamilyInstance inst = construct_ddc_family(DdcFamily::rectangle, FamilyParams{7, {}, {}});
  Shape query = hex_sphere_shape(2);
  Placement pl = best_placement(inst.periodic, query, true, 5'000'000);
  CHECK(pl.count >= 1);
  CHECK(pl.dots.size() == static_cast<size_t>(pl.count));
  std::vector<Shape> symmetries = grid_symmetries(query);
  REQUIRE(pl.symmetry >= 0);
  REQUIRE(pl.symmetry < static_cast<int>(symmetries.size()));
  const Shape& placed = symmetries[static_cast<size_t>(pl.symmetry)];
  for (const Point& d : pl.dots) {
    CHECK(inst.periodic.dot_at(d));
    CHECK(placed.contains(d - pl.offset));
  }
  Placement plain = best_placement(inst.periodic, query, false, 5'000'000);
  CHECK(plain.symmetry == 0);
  CHECK(plain.count <= pl.count);
}
