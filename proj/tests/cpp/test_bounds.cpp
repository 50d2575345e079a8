#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "latfold/bounds.hpp"

using namespace latfold;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("shoelace area") {
  Polygon square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_area(square) == doctest::Approx(1.0));
  CHECK(polygon_area(regular_polygon(4, 1)) == doctest::Approx(2.0));
  CHECK(polygon_area(regular_polygon(6, 1)) == doctest::Approx(1.5 * std::sqrt(3.0)));
  CHECK(polygon_area(regular_polygon(4096, 1)) == doctest::Approx(kPi).epsilon(1e-5));
}

TEST_CASE("convex clipping") {
  Polygon a = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  Polygon b = {{1, 1}, {3, 1}, {3, 3}, {1, 3}};
  CHECK(convex_intersection_area(a, b) == doctest::Approx(1.0));
  Polygon far = {{5, 5}, {6, 5}, {6, 6}, {5, 6}};
  CHECK(convex_intersection_area(a, far) == doctest::Approx(0.0));
  Polygon inner = {{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}};
  CHECK(convex_intersection_area(a, inner) == doctest::Approx(1.0));
  CHECK(convex_intersection_area(inner, a) == doctest::Approx(1.0));
}

TEST_CASE("upper coefficients") {
  CHECK(upper_coeff(BoundFamily::circle) == doctest::Approx(std::sqrt(kPi)));
  CHECK(upper_coeff(BoundFamily::ngon_12k, 4) == doctest::Approx(std::sqrt(2.0)));
  CHECK(upper_coeff(BoundFamily::hexagon) ==
        doctest::Approx(std::sqrt(3.0 * std::sqrt(3.0) / 2.0)));
  CHECK(upper_coeff(BoundFamily::triangle_eq) ==
        doctest::Approx(std::pow(3.0, 0.25) / 2.0));
  CHECK(upper_coeff(BoundFamily::triangle_iso) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("family names round trip") {
  for (BoundFamily f :
       {BoundFamily::triangle_eq, BoundFamily::triangle_iso, BoundFamily::pentagon,
        BoundFamily::hexagon, BoundFamily::heptagon, BoundFamily::octagon,
        BoundFamily::nonagon, BoundFamily::decagon, BoundFamily::ngon_12k,
        BoundFamily::circle})
    CHECK(parse_bound_family(bound_family_name(f)) == f);
  CHECK_THROWS_AS(parse_bound_family("square"), Error);
}

TEST_CASE("hexagon bound is tight") {
  BoundResult r = optimize_bound(BoundFamily::hexagon);
  CHECK(r.lower == doctest::Approx(r.upper).epsilon(1e-9));
  CHECK(r.ratio == doctest::Approx(1.0));
}

TEST_CASE("pinned optimizer results") {
  BoundResult pent = optimize_bound(BoundFamily::pentagon);
  REQUIRE(pent.argmax.size() == 1);
  CHECK(std::abs(pent.argmax[0] - fixtures::kPentagonArg) < 1e-2);
  CHECK(std::abs(pent.lower - 1.45992) < 5e-3);

  BoundResult oct = optimize_bound(BoundFamily::octagon);
  CHECK(std::abs(oct.argmax[0] - fixtures::kOctagonArg) < 1e-2);
  CHECK(std::abs(oct.lower - 1.62625) < 1e-3);

  BoundResult dec = optimize_bound(BoundFamily::decagon);
  CHECK(std::abs(dec.argmax[0] - fixtures::kDecagonArg) < 1e-2);
  CHECK(std::abs(dec.lower - 1.64786) < 1e-3);

  BoundResult circ = optimize_bound(BoundFamily::circle);
  CHECK(std::abs(circ.argmax[0] - fixtures::kCircleArg) < 1e-2);
  CHECK(std::abs(circ.lower - 1.70813) < 1e-3);

  BoundResult hept = optimize_bound(BoundFamily::heptagon);
  REQUIRE(hept.argmax.size() == 2);
  CHECK(std::abs(hept.argmax[0] - fixtures::kHeptagonArg[0]) < 1e-2);
  CHECK(std::abs(hept.argmax[1] - fixtures::kHeptagonArg[1]) < 1e-2);
  CHECK(std::abs(hept.lower - 1.58844) < 5e-3);
}

TEST_CASE("full bound table matches the pinned values") {
  std::vector<BoundTableRow> rows = table_bounds();
  REQUIRE(rows.size() == fixtures::kBoundTable.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& got = rows[i];
    const auto& want = fixtures::kBoundTable[i];
    CHECK(got.label == want.label);
    double tol = (got.label == "5" || got.label == "7") ? 5e-3 : 1e-3;
    CHECK(std::abs(got.upper - want.upper) < 1e-3);
    CHECK(std::abs(got.lower - want.lower) < tol);
    CHECK(std::abs(got.ratio - want.ratio) < 1e-3);
  }
}

TEST_CASE("circle coverage agrees with polygon clipping") {
  double theta = fixtures::kCircleArg;
  double analytic = kPi - 3.0 * theta + 3.0 * std::sin(theta);
  double rho = std::cos(theta / 2.0) / std::cos(kPi / 6.0);
  double clipped = convex_intersection_area(regular_polygon(4096, 1.0),
                                            regular_polygon(6, rho));
  CHECK(clipped == doctest::Approx(analytic).epsilon(1e-4));
}

TEST_CASE("parameter ranges bracket the pinned argmaxes") {
  auto pent = bound_param_ranges(BoundFamily::pentagon);
  REQUIRE(pent.size() == 1);
  CHECK(pent[0][0] < fixtures::kPentagonArg);
  CHECK(pent[0][1] >= fixtures::kPentagonArg);
  auto hept = bound_param_ranges(BoundFamily::heptagon);
  REQUIRE(hept.size() == 2);
  CHECK(hept[0][1] > fixtures::kHeptagonArg[0]);
  CHECK(hept[1][1] > fixtures::kHeptagonArg[1]);
  CHECK(bound_param_ranges(BoundFamily::hexagon).empty());
  CHECK(bound_param_ranges(BoundFamily::nonagon).empty());
}

TEST_CASE("polygon row inputs are validated") {
  CHECK_THROWS_AS(optimize_bound(BoundFamily::ngon_12k, 13), Error);
  CHECK_THROWS_AS(optimize_bound(BoundFamily::ngon_12k, 0), Error);
  CHECK(optimize_bound(BoundFamily::ngon_12k, 24).lower ==
        doctest::Approx(1.69815).epsilon(1e-3));
}
